//! Central embedding problems, the restriction bijection onto invariant
//! characters, and lifting of epimorphisms onto `Z/p`.

use serde::Serialize;

use super::{grt_check, maximal_p_quotient_order, Omega};
use crate::cohomology::h1::all_coords;
use crate::cohomology::{h2, inflate, invariants_h1, transgression};
use crate::error::{Error, Result};
use crate::extensions::{cyclic_group, CentralExtension};
use crate::group::{homs, lifts_through, make_group, quotient, Elem, FiniteGroup, GroupHom};
use crate::zmod;

/// All `Phi: G -> B` with `project(Phi(x)) = proj(x)`.
///
/// `proj: G -> base(omega)` plays the role of the canonical projection onto
/// `G/M`, already identified with the base of `omega`.
pub fn embedding_solutions(proj: &GroupHom, omega: &CentralExtension) -> Result<Vec<GroupHom>> {
    if proj.codomain() != omega.base() {
        return Err(Error::Shape("projection does not land in the base of the extension".into()));
    }
    if !proj.is_surjective() {
        return Err(Error::NotSurjective);
    }
    Ok(lifts_through(proj, omega.project(), false, None))
}

/// Restriction `Phi -> Phi|_M` against the invariant characters with the
/// right transgression.
///
/// The restriction is onto that set, and two solutions have the same
/// restriction exactly when they differ by a character inflated from `G/M`.
/// So the solution count is `|H^1(G/M, A)|` times the character count, and
/// the two counts agree only when `H^1(G/M, A) = 0` or nothing is solvable.
#[derive(Clone, Debug, Serialize)]
pub struct HoechsmannReport {
    pub solutions: usize,
    pub matching_characters: usize,
    pub h1_base_order: u128,
    /// The distinct restrictions are exactly the matching characters.
    pub image_equal: bool,
    /// Every restriction fiber has `|H^1(G/M, A)|` elements.
    pub fibers_uniform: bool,
    /// `solutions == matching_characters`, the literal bijection count.
    pub counts_equal: bool,
    pub holds: bool,
}

/// Compares `{Phi|_M}` with `{phi in H^1(M)^G : trg(phi) = [omega]}`.
pub fn hoechsmann_check(proj: &GroupHom, omega: &CentralExtension) -> Result<HoechsmannReport> {
    let sols = embedding_solutions(proj, omega)?;
    let g = proj.domain();
    let m = proj.kernel();
    let q = omega.modulus();
    let b = omega.middle();

    let mut a_of = vec![None; b.order()];
    for a in 0..q as Elem {
        a_of[omega.inject().apply(a) as usize] = Some(a as u64);
    }
    let (_, emb) = m.as_group();
    let mut restricted: Vec<Vec<u64>> = sols
        .iter()
        .map(|phi| emb.iter().map(|&x| a_of[phi.apply(x) as usize].expect("M maps into the kernel")).collect())
        .collect();
    restricted.sort();
    let mut fibers: Vec<usize> = Vec::new();
    let mut image: Vec<Vec<u64>> = Vec::new();
    for r in restricted {
        if image.last() == Some(&r) {
            *fibers.last_mut().expect("nonempty") += 1;
        } else {
            image.push(r);
            fibers.push(1);
        }
    }

    let (gbar, qproj) = quotient(g, &m)?;
    let section = crate::group::least_section(&qproj);
    let theta = GroupHom::new(&gbar, omega.base(), section.iter().map(|&x| proj.apply(x)).collect())?;
    let target_cocycle = inflate(&omega.to_cocycle(), &theta)?;
    let h1_base_order = crate::cohomology::h1(&gbar, q).order();
    let h2bar = h2(&gbar, q)?;
    let target = h2bar.class_of(&target_cocycle)?;
    let factors = h2bar.invariant_factors().to_vec();

    let inv = invariants_h1(&m, q)?;
    let trg: Vec<Vec<u64>> = inv
        .basis()
        .iter()
        .map(|phi| h2bar.class_of(&transgression(g, &m, phi)?.cocycle))
        .collect::<Result<_>>()?;
    let mut matching: Vec<Vec<u64>> = Vec::new();
    for coords in all_coords(inv.orders()) {
        let mut class = vec![0u64; factors.len()];
        for (&c, t) in coords.iter().zip(&trg) {
            for ((x, &y), &f) in class.iter_mut().zip(t).zip(&factors) {
                *x = zmod::add(*x, zmod::mul(c, y, f), f);
            }
        }
        if class == target {
            matching.push(inv.combine(&coords).values().to_vec());
        }
    }
    matching.sort();
    let image_equal = image == matching;
    let fibers_uniform = fibers.iter().all(|&f| f as u128 == h1_base_order);
    Ok(HoechsmannReport {
        solutions: sols.len(),
        matching_characters: matching.len(),
        h1_base_order,
        image_equal,
        fibers_uniform,
        counts_equal: sols.len() == matching.len(),
        holds: image_equal && fibers_uniform,
    })
}

/// One epimorphism `psi: G -> Z/p` and how it lifts.
#[derive(Clone, Debug, Serialize)]
pub struct EpiLift {
    /// Values of `psi` on all elements.
    pub psi: Vec<Elem>,
    pub bockstein_zero: bool,
    pub lifts_mod_p2: bool,
    /// Name of the first map `psi` factors through, if any.
    pub route: Option<String>,
    /// Images of `G`'s generators in the route's source group.
    pub witness: Option<Vec<Elem>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EpiLiftReport {
    pub group_spec: Option<String>,
    pub p: u64,
    pub preconditions_hold: bool,
    pub precondition_note: Option<String>,
    pub epis: Vec<EpiLift>,
    /// `beta(psi) = 0` exactly when `psi` lifts to `Z/p^2`.
    pub bockstein_criterion: bool,
    pub all_factor: bool,
    pub holds: bool,
}

/// The maps an epimorphism onto `Z/p` is expected to factor through.
fn routes(p: u64) -> Result<Vec<(&'static str, GroupHom)>> {
    let zp = cyclic_group(p);
    let zp2 = cyclic_group(p * p);
    let mut out = vec![("Z/p^2 -> Z/p", GroupHom::from_generator_images(&zp2, &zp, &[1])?)];
    if p == 2 {
        let d4 = make_group("dihedral:8")?;
        out.push(("theta' : D4 -> Z/2", GroupHom::from_generator_images(&d4, &zp, &[1, 0])?));
        out.push(("theta'': D4 -> Z/2", GroupHom::from_generator_images(&d4, &zp, &[0, 1])?));
    } else {
        let m = make_group(&format!("modular:{p}"))?;
        out.push(("lambda'': M -> Z/p", GroupHom::from_generator_images(&m, &zp, &[1, 0])?));
    }
    Ok(out)
}

pub fn epi_lifting_check(g: &FiniteGroup, p: u64) -> Result<EpiLiftReport> {
    let mut notes = Vec::new();
    match grt_check(g, p) {
        Ok(r) if r.holds => {}
        Ok(_) => notes.push("G does not have Galois relation type".to_string()),
        Err(e) => notes.push(format!("Galois relation type undecided: {e}")),
    }
    if p == 2 && maximal_p_quotient_order(g, 2) == 2 {
        notes.push("the maximal 2-quotient is Z/2".into());
    }
    let om = Omega::new(g, p)?;
    let routes = routes(p)?;
    let zp = cyclic_group(p);
    let mut epis = Vec::new();
    for coords in all_coords(&vec![p; om.rank()]).into_iter().skip(1) {
        let chi = om.character(&coords);
        let psi = GroupHom::new(g, &zp, chi.values().iter().map(|&v| v as Elem).collect())?;
        let bockstein_zero = zmod::is_zero(&om.bockstein_class(&coords));
        let mut route = None;
        let mut witness = None;
        let mut lifts_mod_p2 = false;
        for (i, (name, map)) in routes.iter().enumerate() {
            if let Some(phi) = lifts_through(&psi, map, true, Some(1)).pop() {
                if i == 0 {
                    lifts_mod_p2 = true;
                }
                if route.is_none() {
                    route = Some(name.to_string());
                    witness = Some(g.generators().iter().map(|&s| phi.apply(s)).collect());
                }
            }
        }
        epis.push(EpiLift {
            psi: psi.images().to_vec(),
            bockstein_zero,
            lifts_mod_p2,
            route,
            witness,
        });
    }
    // Remaining epimorphisms are nonzero multiples; enumeration above covers all characters.
    debug_assert_eq!(epis.len(), homs(g, &zp, true).len());
    let bockstein_criterion = epis.iter().all(|e| e.bockstein_zero == e.lifts_mod_p2);
    let all_factor = epis.iter().all(|e| e.route.is_some());
    let preconditions_hold = notes.is_empty();
    Ok(EpiLiftReport {
        group_spec: g.name().map(str::to_string),
        p,
        preconditions_hold,
        precondition_note: (!notes.is_empty()).then(|| notes.join("; ")),
        epis,
        bockstein_criterion,
        all_factor,
        holds: bockstein_criterion && (!preconditions_hold || all_factor),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extensions::omega;

    fn grp(s: &str) -> FiniteGroup {
        make_group(s).unwrap()
    }

    #[test]
    fn cyclic_four_over_two() {
        let g = grp("cyclic:4");
        let w2 = omega(2, 2).unwrap();
        let proj = GroupHom::from_generator_images(&g, w2.base(), &[1]).unwrap();
        let sols = embedding_solutions(&proj, &w2).unwrap();
        assert_eq!(sols.len(), 2);
        let r = hoechsmann_check(&proj, &w2).unwrap();
        assert!(r.holds, "{r:?}");
        // Both solutions restrict to the same character of M.
        assert_eq!(r.matching_characters, 1);
        assert!(!r.counts_equal);
    }

    #[test]
    fn quaternion_has_no_dihedral_image() {
        let g = grp("quaternion:8");
        let w3 = omega(3, 2).unwrap();
        let proj = homs(&g, w3.base(), true).remove(0);
        assert!(embedding_solutions(&proj, &w3).unwrap().is_empty());
        let r = hoechsmann_check(&proj, &w3).unwrap();
        assert!(r.holds && r.matching_characters == 0);
    }

    #[test]
    fn split_problems_are_solvable() {
        for s in ["dihedral:8", "modular:3", "direct:cyclic:9,cyclic:3"] {
            let g = grp(s);
            let p = if s.starts_with("dihedral") { 2 } else { 3 };
            let w1 = omega(1, p).unwrap();
            for proj in homs(&g, w1.base(), true) {
                assert!(!embedding_solutions(&proj, &w1).unwrap().is_empty());
                assert!(hoechsmann_check(&proj, &w1).unwrap().holds);
            }
        }
    }

    #[test]
    fn epi_lifting() {
        let z9 = epi_lifting_check(&grp("cyclic:9"), 3).unwrap();
        assert!(z9.preconditions_hold && z9.all_factor && z9.holds);
        let zz = epi_lifting_check(&grp("direct:cyclic:9,cyclic:9"), 3).unwrap();
        assert_eq!(zz.epis.len(), 8);
        assert!(zz.epis.iter().all(|e| e.route.as_deref() == Some("Z/p^2 -> Z/p")));
        let q8 = epi_lifting_check(&grp("quaternion:8"), 2).unwrap();
        assert!(!q8.preconditions_hold);
        assert!(q8.bockstein_criterion);
        let d4 = epi_lifting_check(&grp("dihedral:8"), 2).unwrap();
        assert!(d4.preconditions_hold && d4.all_factor);
    }
}
