//! Structural predicates for `W = G/G^(3)`.

use serde::Serialize;

use super::distinguished::small_quotients;
use super::{grt_check, maximal_p_quotient_order};
use crate::error::Result;
use crate::extensions::SmallType;
use crate::group::{center, maximal_central_p_children, FiniteGroup, Subgroup};
use crate::series::{q_central_series, w_quotient};

#[derive(Clone, Debug, Serialize)]
pub struct Predicate {
    pub name: String,
    /// Whether the hypotheses under which the predicate is claimed hold.
    pub applicable: bool,
    pub holds: bool,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WGroupReport {
    pub group_spec: Option<String>,
    pub p: u64,
    pub w_order: usize,
    pub w_abelian: bool,
    pub grt_holds: Option<bool>,
    pub short_list_hypothesis: bool,
    pub predicates: Vec<Predicate>,
    /// Every applicable predicate holds.
    pub holds: bool,
}

/// Whether `W = Z/p x K` for some `K`: a central `z` of order `p` outside an
/// index-`p` normal subgroup gives the splitting.
pub fn has_cyclic_direct_factor(w: &FiniteGroup, p: u64) -> bool {
    let z = center(w);
    let central: Vec<_> = z.members().iter().copied().filter(|&x| w.element_order(x) as u64 == p).collect();
    if central.is_empty() {
        return false;
    }
    maximal_central_p_children(w, &Subgroup::whole(w), p)
        .iter()
        .any(|k| central.iter().any(|&x| !k.contains(x)))
}

pub fn wgroup_properties(g: &FiniteGroup, p: u64) -> Result<WGroupReport> {
    let (w, _) = w_quotient(g, p)?;
    let grt_holds = grt_check(g, p).ok().map(|r| r.holds);
    let grt = grt_holds == Some(true);
    let short = p != 2 || maximal_p_quotient_order(g, 2) != 2;
    let types: Vec<SmallType> = small_quotients(&w, p).into_iter().map(|d| d.quotient).collect();
    let has = |t: &SmallType| types.contains(t);
    let (top, top_name, bad, bad_name) = if p == 2 {
        (SmallType::D4, "D4", SmallType::Q8, "Q8")
    } else {
        (SmallType::Modular(p), "M_{p^3}", SmallType::Heisenberg(p), "H_{p^3}")
    };

    let mut predicates = Vec::new();
    predicates.push(Predicate {
        name: format!("nonabelian W has a {top_name} quotient"),
        applicable: grt && !w.is_abelian(),
        holds: w.is_abelian() || has(&top),
        note: w.is_abelian().then(|| "W is abelian; vacuous".to_string()),
    });

    let w2 = q_central_series(&w, p).term(2).clone();
    let outside: Vec<_> = w.elements().filter(|&x| w.element_order(x) as u64 == p && !w2.contains(x)).collect();
    predicates.push(Predicate {
        name: "elements of order p lie in W^(2)".into(),
        applicable: grt && p != 2,
        holds: outside.is_empty(),
        note: (p == 2 && !outside.is_empty())
            .then(|| format!("{} elements of order 2 outside W^(2); the claim needs p odd", outside.len())),
    });

    predicates.push(Predicate {
        name: format!("no Z/{p} direct factor"),
        applicable: grt && short,
        holds: !has_cyclic_direct_factor(&w, p),
        note: None,
    });

    predicates.push(Predicate {
        name: format!("{bad_name} quotient implies {top_name} quotient"),
        applicable: grt,
        holds: !has(&bad) || has(&top),
        note: None,
    });

    let holds = predicates.iter().all(|pr| !pr.applicable || pr.holds);
    Ok(WGroupReport {
        group_spec: g.name().map(str::to_string),
        p,
        w_order: w.order(),
        w_abelian: w.is_abelian(),
        grt_holds,
        short_list_hypothesis: short,
        predicates,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_group;

    fn grp(s: &str) -> FiniteGroup {
        make_group(s).unwrap()
    }

    #[test]
    fn example_model() {
        let r = wgroup_properties(&grp("semidirect:9,9,4"), 3).unwrap();
        assert!(!r.w_abelian);
        assert!(r.predicates.iter().all(|p| p.holds), "{r:?}");
    }

    #[test]
    fn z2_counterexample_recorded() {
        let r = wgroup_properties(&grp("cyclic:2"), 2).unwrap();
        let pr = &r.predicates[1];
        assert!(!pr.applicable && !pr.holds && pr.note.is_some());
        assert!(r.holds);
    }

    #[test]
    fn direct_factors() {
        assert!(has_cyclic_direct_factor(&grp("direct:cyclic:9,cyclic:3"), 3));
        assert!(!has_cyclic_direct_factor(&grp("direct:cyclic:9,cyclic:9"), 3));
        assert!(has_cyclic_direct_factor(&grp("direct:dihedral:8,cyclic:2"), 2));
        assert!(!has_cyclic_direct_factor(&grp("dihedral:8"), 2));
        assert!(!has_cyclic_direct_factor(&grp("modular:3"), 3));
    }
}
