//! Central extensions `0 -> Z/m -> B -> G -> 1` and their classes.

use std::fmt;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::cohomology::{is_2cocycle_fast, Cochain2};
use crate::error::{Error, Result};
use crate::group::{
    fingerprint, quotient, search_homs, Elem, FiniteGroup, GroupHom, GroupSpec, SearchOptions, Subgroup,
};
use crate::zmod::{add, neg};

/// The cyclic group `Z/m`, element `i` being the residue `i`.
pub fn cyclic_group(m: u64) -> FiniteGroup {
    GroupSpec::Cyclic(m.max(1)).build(usize::MAX).expect("cyclic groups build")
}

/// A central extension of `base` by `Z/m`.
#[derive(Clone, Debug)]
pub struct CentralExtension {
    m: u64,
    inject: GroupHom,
    project: GroupHom,
}

/// Canonical JSON form of an extension.
#[derive(Clone, Debug, Serialize)]
pub struct ExtensionJson {
    pub base_spec: Option<String>,
    pub modulus: u64,
    pub middle_order: usize,
    pub middle_table_digest: String,
    pub inject: Vec<Elem>,
    pub project: Vec<Elem>,
}

impl CentralExtension {
    /// Checks exactness and centrality by enumeration.
    pub fn new(inject: GroupHom, project: GroupHom) -> Result<CentralExtension> {
        let m = inject.domain().order() as u64;
        if inject.domain() != &cyclic_group(m) {
            return Err(Error::NotExact("kernel must be the standard Z/m".into()));
        }
        if inject.codomain() != project.domain() {
            return Err(Error::Shape("inject and project do not compose".into()));
        }
        if !inject.is_injective() {
            return Err(Error::NotExact("inject is not injective".into()));
        }
        let image = inject.image();
        if !image.is_central() {
            return Err(Error::NotExact("kernel is not central".into()));
        }
        if !project.is_surjective() {
            return Err(Error::NotExact("project is not surjective".into()));
        }
        if project.kernel() != image {
            return Err(Error::NotExact("ker(project) != im(inject)".into()));
        }
        Ok(CentralExtension { m, inject, project })
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn middle(&self) -> &FiniteGroup {
        self.project.domain()
    }

    pub fn base(&self) -> &FiniteGroup {
        self.project.codomain()
    }

    pub fn inject(&self) -> &GroupHom {
        &self.inject
    }

    pub fn project(&self) -> &GroupHom {
        &self.project
    }

    /// The middle group on pairs `(a, s)`, indexed `a + m*s`, with
    /// `(a, s)(b, t) = (a + b + c(s, t), st)`.
    pub fn from_cocycle(c: &Cochain2) -> Result<CentralExtension> {
        if !is_2cocycle_fast(c) {
            return Err(Error::NotCocycle);
        }
        let g = c.group();
        let m = c.modulus();
        let mu = m as usize;
        let n = g.order() * mu;
        let mut gens: Vec<Elem> = Vec::new();
        if m > 1 {
            gens.push(1);
        }
        gens.extend(g.generators().iter().map(|&s| s * m as Elem));
        let labels = (0..n)
            .map(|i| format!("({},{})", i % mu, g.label((i / mu) as Elem)))
            .collect();
        let middle = FiniteGroup::from_fn(
            n,
            |x, y| {
                let (a, s) = ((x % mu) as u64, (x / mu) as Elem);
                let (b, t) = ((y % mu) as u64, (y / mu) as Elem);
                let v = add(add(a, b, m), c.at(s, t), m);
                v as usize + mu * g.mul(s, t) as usize
            },
            gens,
            Some(labels),
            None,
        )?;
        let kernel = cyclic_group(m);
        let inject = GroupHom::new_unchecked(&kernel, &middle, (0..m as Elem).collect());
        let project = GroupHom::new_unchecked(&middle, g, (0..n).map(|i| (i / mu) as Elem).collect());
        Ok(CentralExtension { m, inject, project })
    }

    /// The kernel residue of each middle element in the image of `inject`.
    fn kernel_residues(&self) -> Vec<Option<u64>> {
        let mut out = vec![None; self.middle().order()];
        for a in 0..self.m {
            out[self.inject.apply(a as Elem) as usize] = Some(a);
        }
        out
    }

    /// `c(x, y) = s(x) s(y) s(xy)^(-1)` for the least-element section `s`.
    pub fn to_cocycle(&self) -> Cochain2 {
        let b = self.middle();
        let base = self.base();
        let s = crate::group::least_section(&self.project);
        let res = self.kernel_residues();
        let values = base
            .elements()
            .flat_map(|x| base.elements().map(move |y| (x, y)))
            .map(|(x, y)| {
                let z = b.mul(
                    b.mul(s[x as usize], s[y as usize]),
                    b.inv(s[base.mul(x, y) as usize]),
                );
                res[z as usize].expect("exact extension: defect lies in the kernel")
            })
            .collect();
        Cochain2::new_unchecked(base, self.m, values)
    }

    fn check_compatible(&self, other: &CentralExtension) -> Result<()> {
        if self.m != other.m {
            return Err(Error::ModulusMismatch(self.m as u32, other.m as u32));
        }
        if self.base() != other.base() {
            return Err(Error::Shape("extensions have different base groups".into()));
        }
        Ok(())
    }

    /// An isomorphism `h: B -> B'` with `h∘inject = inject'` and
    /// `project'∘h = project`, if one exists.
    pub fn equivalence(&self, other: &CentralExtension) -> Result<Option<GroupHom>> {
        self.check_compatible(other)?;
        if self.middle().order() != other.middle().order() {
            return Ok(None);
        }
        let b = self.middle();
        let b2 = other.middle();
        let mut fibers: Vec<Vec<Elem>> = vec![Vec::new(); self.base().order()];
        for y in b2.elements() {
            fibers[other.project.apply(y) as usize].push(y);
        }
        let res = self.kernel_residues();
        let cands: Vec<Vec<Elem>> = b
            .generators()
            .iter()
            .map(|&g| match res[g as usize] {
                Some(a) => vec![other.inject.apply(a as Elem)],
                None => fibers[self.project.apply(g) as usize].clone(),
            })
            .collect();
        let k = if self.m > 1 { self.inject.apply(1) } else { 0 };
        let k2 = if self.m > 1 { other.inject.apply(1) } else { 0 };
        let found = search_homs(b, b2, &cands, SearchOptions::default())
            .into_iter()
            .find(|h| h.apply(k) == k2 && h.is_bijective());
        Ok(found)
    }

    pub fn is_equivalent(&self, other: &CentralExtension) -> Result<bool> {
        Ok(self.equivalence(other)?.is_some())
    }

    /// Fibered product `B1 x_G B2` modulo `{(f1(a), f2(-a))}`.
    pub fn baer_sum(&self, other: &CentralExtension) -> Result<CentralExtension> {
        self.check_compatible(other)?;
        let (b1, b2) = (self.middle(), other.middle());
        let (n1, n2) = (b1.order(), b2.order());
        let mut pairs: Vec<(Elem, Elem)> = Vec::new();
        let mut index = vec![u32::MAX; n1 * n2];
        for x in b1.elements() {
            for y in b2.elements() {
                if self.project.apply(x) == other.project.apply(y) {
                    index[x as usize * n2 + y as usize] = pairs.len() as Elem;
                    pairs.push((x, y));
                }
            }
        }
        let at = |x: Elem, y: Elem| index[x as usize * n2 + y as usize];
        // Lifts of B1's generators plus both kernel generators generate P.
        let mut gens: Vec<Elem> = Vec::new();
        let s2 = crate::group::least_section(&other.project);
        for &g in b1.generators() {
            gens.push(at(g, s2[self.project.apply(g) as usize]));
        }
        if self.m > 1 {
            gens.push(at(self.inject.apply(1), 0));
            gens.push(at(0, other.inject.apply(1)));
        }
        let p = FiniteGroup::from_fn(
            pairs.len(),
            |i, j| {
                let (x1, y1) = pairs[i];
                let (x2, y2) = pairs[j];
                at(b1.mul(x1, x2), b2.mul(y1, y2)) as usize
            },
            gens,
            None,
            None,
        )?;
        let anti: Vec<Elem> = (0..self.m)
            .map(|a| at(self.inject.apply(a as Elem), other.inject.apply(neg(a, self.m) as Elem)))
            .collect();
        let d = Subgroup::new(&p, &anti)?;
        let (middle, proj) = quotient(&p, &d)?;
        let kernel = cyclic_group(self.m);
        let inject = GroupHom::new_unchecked(
            &kernel,
            &middle,
            (0..self.m).map(|a| proj.apply(at(self.inject.apply(a as Elem), 0))).collect(),
        );
        let mut project = vec![0; middle.order()];
        for (i, &(x, _)) in pairs.iter().enumerate() {
            project[proj.apply(i as Elem) as usize] = self.project.apply(x);
        }
        let project = GroupHom::new_unchecked(&middle, self.base(), project);
        CentralExtension::new(inject, project)
    }

    /// `omega^theta`: same middle group, projection `theta^(-1) ∘ g`.
    pub fn twist(&self, theta: &GroupHom) -> Result<CentralExtension> {
        if theta.codomain() != self.base() {
            return Err(Error::Shape("theta must land in the base group".into()));
        }
        let inv = theta.inverse()?;
        let project = self.project.then(&inv)?;
        Ok(CentralExtension {
            m: self.m,
            inject: self.inject.clone(),
            project,
        })
    }

    /// Inflation along `epi: G' -> base`: the fiber product `B x_base G'`.
    pub fn inflate(&self, epi: &GroupHom) -> Result<CentralExtension> {
        if epi.codomain() != self.base() {
            return Err(Error::Shape("epimorphism must land in the base group".into()));
        }
        if !epi.is_surjective() {
            return Err(Error::NotSurjective);
        }
        let b = self.middle();
        let gb = epi.domain();
        let ng = gb.order();
        let mut pairs: Vec<(Elem, Elem)> = Vec::new();
        let mut index = vec![u32::MAX; b.order() * ng];
        for x in b.elements() {
            for s in gb.elements() {
                if self.project.apply(x) == epi.apply(s) {
                    index[x as usize * ng + s as usize] = pairs.len() as Elem;
                    pairs.push((x, s));
                }
            }
        }
        let at = |x: Elem, s: Elem| index[x as usize * ng + s as usize];
        let sec = crate::group::least_section(&self.project);
        let mut gens: Vec<Elem> = Vec::new();
        if self.m > 1 {
            gens.push(at(self.inject.apply(1), 0));
        }
        for &s in gb.generators() {
            gens.push(at(sec[epi.apply(s) as usize], s));
        }
        let labels = b.labels().map(|lb| {
            pairs
                .iter()
                .map(|&(x, s)| format!("({},{})", lb[x as usize], gb.label(s)))
                .collect()
        });
        let middle = FiniteGroup::from_fn(
            pairs.len(),
            |i, j| {
                let (x1, s1) = pairs[i];
                let (x2, s2) = pairs[j];
                at(b.mul(x1, x2), gb.mul(s1, s2)) as usize
            },
            gens,
            labels,
            None,
        )?;
        let kernel = cyclic_group(self.m);
        let inject = GroupHom::new_unchecked(
            &kernel,
            &middle,
            (0..self.m).map(|a| at(self.inject.apply(a as Elem), 0)).collect(),
        );
        let project = GroupHom::new_unchecked(&middle, gb, pairs.iter().map(|&(_, s)| s).collect());
        Ok(CentralExtension {
            m: self.m,
            inject,
            project,
        })
    }

    pub fn to_json(&self) -> ExtensionJson {
        ExtensionJson {
            base_spec: self.base().name().map(str::to_string),
            modulus: self.m,
            middle_order: self.middle().order(),
            middle_table_digest: table_digest(self.middle()),
            inject: self.inject.images().to_vec(),
            project: self.project.images().to_vec(),
        }
    }
}

/// SHA-256 of the little-endian `u32` table.
pub fn table_digest(g: &FiniteGroup) -> String {
    let mut h = Sha256::new();
    for &x in g.table() {
        h.update(x.to_le_bytes());
    }
    hex::encode(h.finalize())
}

/// An extension up to equivalence.
#[derive(Clone, Debug)]
pub struct ExtensionClass {
    pub representative: CentralExtension,
}

impl PartialEq for ExtensionClass {
    fn eq(&self, other: &Self) -> bool {
        self.representative
            .is_equivalent(&other.representative)
            .unwrap_or(false)
    }
}

impl From<CentralExtension> for ExtensionClass {
    fn from(representative: CentralExtension) -> Self {
        ExtensionClass { representative }
    }
}

fn build(spec: GroupSpec) -> FiniteGroup {
    spec.build(usize::MAX).expect("catalog groups build")
}

fn hom(domain: &FiniteGroup, codomain: &FiniteGroup, gen_images: &[Elem]) -> GroupHom {
    GroupHom::from_generator_images(domain, codomain, gen_images).expect("catalog maps are homomorphisms")
}

/// The extensions `omega_0, ..., omega_6` of the catalog, over the prime `p`.
///
/// `omega_3` exists only for `p = 2`, `omega_4` and `omega_5` only for odd `p`.
pub fn omega(i: usize, p: u64) -> Result<CentralExtension> {
    let pe = p as Elem;
    let zp = build(GroupSpec::Cyclic(p));
    let plane = build(GroupSpec::Elementary { p, n: 2 });
    let (inject_images, middle, base, gen_images): (Vec<Elem>, FiniteGroup, FiniteGroup, Vec<Elem>) = match i {
        0 => {
            let base = FiniteGroup::trivial();
            let gens = vec![0; zp.generators().len()];
            ((0..pe).collect(), zp.clone(), base, gens)
        }
        1 => (
            (0..pe).collect(),
            plane.clone(),
            zp.clone(),
            vec![0, 1],
        ),
        2 => {
            let big = build(GroupSpec::Cyclic(p * p));
            ((0..pe).map(|a| a * pe).collect(), big, zp.clone(), vec![1])
        }
        3 => {
            if p != 2 {
                return Err(Error::Precondition("omega_3 needs p = 2".into()));
            }
            // r -> (1,1), s -> (0,1)
            (vec![0, 2], build(GroupSpec::Dihedral(8)), plane.clone(), vec![3, 2])
        }
        4 | 5 if p == 2 => {
            return Err(Error::Precondition(format!("omega_{i} needs p odd")));
        }
        4 => {
            // t^i; r -> (1,0), s -> (0,1)
            let h = build(GroupSpec::Heisenberg(p));
            ((0..pe).map(|a| a * pe * pe).collect(), h, plane.clone(), vec![1, pe])
        }
        5 => {
            // r^(pi); r -> (1,0), s -> (0,1)
            let mm = build(GroupSpec::Modular(p));
            ((0..pe).map(|a| a * pe).collect(), mm, plane.clone(), vec![1, pe])
        }
        6 => {
            let d = build(GroupSpec::Direct(
                Box::new(GroupSpec::Cyclic(p * p)),
                Box::new(GroupSpec::Cyclic(p)),
            ));
            ((0..pe).map(|a| a * pe).collect(), d, plane.clone(), vec![1, pe])
        }
        _ => return Err(Error::Precondition(format!("no extension omega_{i}"))),
    };
    let inject = GroupHom::new(&zp, &middle, inject_images)?;
    let project = hom(&middle, &base, &gen_images);
    CentralExtension::new(inject, project)
}

/// Isomorphism types of groups of order dividing `p^3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SmallType {
    Trivial,
    /// `Z/n`
    Cyclic(u64),
    /// `(Z/p)^k`, `k >= 2`
    Elementary(u64, u32),
    /// `Z/p^2 x Z/p`
    CyclicSquareByCyclic(u64),
    D4,
    Q8,
    Heisenberg(u64),
    Modular(u64),
    Other(String),
}

impl fmt::Display for SmallType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SmallType::Trivial => write!(f, "1"),
            SmallType::Cyclic(n) => write!(f, "Z/{n}"),
            SmallType::Elementary(p, k) => write!(f, "(Z/{p})^{k}"),
            SmallType::CyclicSquareByCyclic(p) => write!(f, "Z/{}xZ/{p}", p * p),
            SmallType::D4 => write!(f, "D4"),
            SmallType::Q8 => write!(f, "Q8"),
            SmallType::Heisenberg(p) => write!(f, "H{}", p * p * p),
            SmallType::Modular(p) => write!(f, "M{}", p * p * p),
            SmallType::Other(s) => write!(f, "{s}"),
        }
    }
}

fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n % d == 0)?;
    let mut k = 0;
    let mut r = n;
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

/// Names a group of order dividing `p^3`; anything else gets a fingerprint string.
pub fn classify_middle(b: &FiniteGroup) -> SmallType {
    let n = b.order() as u64;
    if n == 1 {
        return SmallType::Trivial;
    }
    let exp = b.exponent();
    if let Some((p, k)) = prime_power(n).filter(|&(_, k)| k <= 3) {
        if exp == n {
            return SmallType::Cyclic(n);
        }
        if b.is_abelian() {
            return if exp == p {
                SmallType::Elementary(p, k)
            } else {
                SmallType::CyclicSquareByCyclic(p)
            };
        }
        if p == 2 {
            let involutions = b.elements().filter(|&x| b.element_order(x) == 2).count();
            return if involutions == 5 { SmallType::D4 } else { SmallType::Q8 };
        }
        return if exp == p {
            SmallType::Heisenberg(p)
        } else {
            SmallType::Modular(p)
        };
    }
    let fp = fingerprint(b);
    SmallType::Other(format!(
        "order {} exponent {} center {} derived {} abelianization {:?}",
        fp.order, fp.exponent, fp.center_order, fp.derived_order, fp.abelianization
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{bockstein, cup, d1, h1, h2, Cochain1};
    use crate::group::{is_isomorphic, make_group};

    fn grp(s: &str) -> FiniteGroup {
        make_group(s).unwrap()
    }

    #[test]
    fn catalog_is_exact_and_respects_parity() {
        for p in [2u64, 3, 5] {
            for i in 0..=6 {
                let ok = match i {
                    3 => p == 2,
                    4 | 5 => p != 2,
                    _ => true,
                };
                assert_eq!(omega(i, p).is_ok(), ok, "omega_{i} at p={p}");
            }
        }
        assert!(omega(7, 3).is_err());
    }

    #[test]
    fn catalog_middle_groups() {
        assert_eq!(classify_middle(omega(3, 2).unwrap().middle()), SmallType::D4);
        assert_eq!(classify_middle(omega(4, 3).unwrap().middle()), SmallType::Heisenberg(3));
        assert_eq!(classify_middle(omega(5, 3).unwrap().middle()), SmallType::Modular(3));
        assert_eq!(classify_middle(omega(6, 5).unwrap().middle()), SmallType::CyclicSquareByCyclic(5));
        assert_eq!(omega(4, 5).unwrap().middle().exponent(), 5);
        let w0 = omega(0, 3).unwrap();
        assert_eq!(w0.base().order(), 1);
        assert!(w0.inject().is_bijective());
    }

    #[test]
    fn classify_small_groups() {
        let cases = [
            ("cyclic:1", "1"),
            ("cyclic:3", "Z/3"),
            ("elementary:3:2", "(Z/3)^2"),
            ("cyclic:9", "Z/9"),
            ("cyclic:27", "Z/27"),
            ("direct:cyclic:9,cyclic:3", "Z/9xZ/3"),
            ("elementary:3:3", "(Z/3)^3"),
            ("dihedral:8", "D4"),
            ("quaternion:8", "Q8"),
            ("heisenberg:3", "H27"),
            ("modular:3", "M27"),
            ("direct:cyclic:4,cyclic:2", "Z/4xZ/2"),
        ];
        for (s, name) in cases {
            assert_eq!(classify_middle(&grp(s)).to_string(), name, "{s}");
        }
        assert!(matches!(classify_middle(&grp("dihedral:6")), SmallType::Other(_)));
    }

    #[test]
    fn cocycle_round_trip() {
        for (i, p) in [(1, 2), (2, 2), (3, 2), (4, 3), (5, 3), (6, 3), (2, 5)] {
            let w = omega(i, p).unwrap();
            let c = w.to_cocycle();
            let back = CentralExtension::from_cocycle(&c).unwrap();
            assert!(back.is_equivalent(&w).unwrap(), "omega_{i} p={p}");
            assert!(w.is_equivalent(&back).unwrap());
        }
    }

    #[test]
    fn split_cocycle_gives_omega1() {
        let zp = grp("cyclic:3");
        let e = CentralExtension::from_cocycle(&Cochain2::zero(&zp, 3)).unwrap();
        assert!(e.is_equivalent(&omega(1, 3).unwrap()).unwrap());
        assert!(omega(1, 3).unwrap().to_cocycle().is_zero());
    }

    #[test]
    fn cup_and_bockstein_extensions() {
        let v = grp("elementary:2:2");
        let b = h1(&v, 2).basis().to_vec();
        let e = CentralExtension::from_cocycle(&cup(&b[0], &b[1]).unwrap()).unwrap();
        assert_eq!(classify_middle(e.middle()), SmallType::D4);
        let z3 = grp("cyclic:3");
        let id = Cochain1::new(&z3, 3, vec![0, 1, 2]).unwrap();
        let e = CentralExtension::from_cocycle(&bockstein(&id, 3).unwrap()).unwrap();
        assert!(e.is_equivalent(&omega(2, 3).unwrap()).unwrap());
        let w2 = omega(2, 3).unwrap();
        let s = h2(&z3, 3).unwrap();
        assert_eq!(s.class_of(&w2.to_cocycle()).unwrap(), s.class_of(&bockstein(&id, 3).unwrap()).unwrap());
    }

    #[test]
    fn non_cocycle_rejected() {
        let c = Cochain2::new(&grp("elementary:2:2"), 2, {
            let mut v = vec![0; 16];
            v[1 * 4 + 2] = 1;
            v
        });
        assert_eq!(CentralExtension::from_cocycle(&c.unwrap()).unwrap_err(), Error::NotCocycle);
    }

    #[test]
    fn cohomologous_cocycles_give_equivalent_extensions() {
        let g = grp("dihedral:8");
        let s = h2(&g, 2).unwrap();
        let f = Cochain1::new(&g, 2, (0..8).map(|x| (x * 5 / 3) % 2).collect()).unwrap();
        for c in s.basis() {
            let shifted = c.add(&d1(&f)).unwrap();
            let a = CentralExtension::from_cocycle(c).unwrap();
            let b = CentralExtension::from_cocycle(&shifted).unwrap();
            assert!(a.is_equivalent(&b).unwrap());
        }
    }

    #[test]
    fn baer_sum_identities() {
        for p in [3u64, 5] {
            let sum = omega(4, p).unwrap().baer_sum(&omega(6, p).unwrap()).unwrap();
            assert!(sum.is_equivalent(&omega(5, p).unwrap()).unwrap(), "p={p}");
        }
        let w2 = omega(2, 2).unwrap();
        let doubled = w2.baer_sum(&w2).unwrap();
        assert!(doubled.is_equivalent(&omega(1, 2).unwrap()).unwrap());
        let w = omega(5, 3).unwrap();
        let split = CentralExtension::from_cocycle(&Cochain2::zero(w.base(), 3)).unwrap();
        assert!(w.baer_sum(&split).unwrap().is_equivalent(&w).unwrap());
    }

    #[test]
    fn baer_sum_matches_cocycle_sum() {
        let v = grp("elementary:3:2");
        let s = h2(&v, 3).unwrap();
        for a in s.basis() {
            for b in s.basis() {
                let ea = CentralExtension::from_cocycle(a).unwrap();
                let eb = CentralExtension::from_cocycle(b).unwrap();
                let sum = ea.baer_sum(&eb).unwrap().to_cocycle();
                assert_eq!(s.class_of(&sum).unwrap(), s.class_of(&a.add(b).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn twists() {
        let w3 = omega(3, 2).unwrap();
        let v = w3.base().clone();
        let id = GroupHom::identity(&v);
        assert!(w3.twist(&id).unwrap().is_equivalent(&w3).unwrap());
        let swap = GroupHom::from_generator_images(&v, &v, &[2, 1]).unwrap();
        let twisted = w3.twist(&swap).unwrap();
        let back = twisted.twist(&swap.inverse().unwrap()).unwrap();
        assert!(back.is_equivalent(&w3).unwrap());
        // Twisting pulls the cocycle back along theta.
        let pulled = crate::cohomology::inflate(&w3.to_cocycle(), &swap).unwrap();
        let expected = CentralExtension::from_cocycle(&pulled).unwrap();
        assert!(twisted.is_equivalent(&expected).unwrap());
        assert!(w3.twist(&GroupHom::trivial(&v, &v)).is_err());
    }

    #[test]
    fn inflation_of_omega2_is_omega6() {
        for p in [2u64, 3] {
            let plane = grp(&format!("elementary:{p}:2"));
            let zp = grp(&format!("cyclic:{p}"));
            let pr1 = GroupHom::from_generator_images(&plane, &zp, &[1, 0]).unwrap();
            let inf = omega(2, p).unwrap().inflate(&pr1).unwrap();
            assert!(inf.is_equivalent(&omega(6, p).unwrap()).unwrap());
            assert!(is_isomorphic(inf.middle(), &grp(&format!("direct:cyclic:{},cyclic:{p}", p * p))).is_some());
            let w = omega(2, p).unwrap();
            let same = w.inflate(&GroupHom::identity(w.base())).unwrap();
            assert!(same.is_equivalent(&w).unwrap());
        }
    }

    #[test]
    fn q8_extension_is_not_omega3() {
        let q = grp("quaternion:8");
        let z = crate::group::center(&q);
        let (base, proj) = quotient(&q, &z).unwrap();
        let v = grp("elementary:2:2");
        let iso = is_isomorphic(&base, &v).unwrap();
        let project = proj.then(&iso).unwrap();
        let inject = GroupHom::new(&cyclic_group(2), &q, vec![0, z.members()[1]]).unwrap();
        let e = CentralExtension::new(inject, project).unwrap();
        assert!(!e.is_equivalent(&omega(3, 2).unwrap()).unwrap());
    }

    #[test]
    fn json_is_stable() {
        let a = serde_json::to_string(&omega(5, 3).unwrap().to_json()).unwrap();
        let b = serde_json::to_string(&omega(5, 3).unwrap().to_json()).unwrap();
        assert_eq!(a, b);
        assert!(a.contains("\"base_spec\":\"elementary:3:2\""));
    }

    #[test]
    fn exactness_is_enforced() {
        let z4 = grp("cyclic:4");
        let z2 = grp("cyclic:2");
        let inject = GroupHom::new(&cyclic_group(2), &z4, vec![0, 2]).unwrap();
        let bad = GroupHom::trivial(&z4, &z2);
        assert!(CentralExtension::new(inject, bad).is_err());
    }
}
