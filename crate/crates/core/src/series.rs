//! The descending `q`-central series and the quotient `G/G^(3)`.

use serde::Serialize;

use crate::error::Result;
use crate::group::{commutator_subgroup, power_subgroup, quotient, Elem, FiniteGroup, GroupHom, Subgroup};

/// `G = G^(1) >= G^(2) >= ...` with `G^(i+1) = (G^(i))^q [G^(i), G]`.
///
/// `terms` stops at the first term that repeats, so consecutive terms are
/// distinct and the last one is stable.
#[derive(Clone, Debug)]
pub struct CentralSeries {
    pub group: FiniteGroup,
    pub q: u64,
    pub terms: Vec<Subgroup>,
}

impl CentralSeries {
    /// `G^(i)` for `i >= 1`; past the end the series is constant.
    pub fn term(&self, i: usize) -> &Subgroup {
        assert!(i >= 1, "terms are numbered from 1");
        &self.terms[(i - 1).min(self.terms.len() - 1)]
    }

    /// Member lists of each term, for serialization.
    pub fn member_lists(&self) -> Vec<Vec<Elem>> {
        self.terms.iter().map(Subgroup::to_vec).collect()
    }

    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(Subgroup::order).collect()
    }
}

/// `(G^(i))^q [G^(i), G]`.
pub fn next_term(t: &Subgroup, q: u64) -> Subgroup {
    let g = t.parent();
    power_subgroup(t, q).join(&commutator_subgroup(t, g).expect("term lives in G"))
}

pub fn q_central_series(g: &FiniteGroup, q: u64) -> CentralSeries {
    let mut terms = vec![Subgroup::whole(g)];
    loop {
        let next = next_term(terms.last().expect("nonempty"), q);
        if &next == terms.last().expect("nonempty") {
            break;
        }
        terms.push(next);
    }
    CentralSeries {
        group: g.clone(),
        q,
        terms,
    }
}

/// `G/G^(3)` with its projection.
pub fn w_quotient(g: &FiniteGroup, q: u64) -> Result<(FiniteGroup, GroupHom)> {
    let s = q_central_series(g, q);
    quotient(g, s.term(3))
}

#[derive(Clone, Debug, Serialize)]
pub struct SeriesJson {
    pub group_spec: Option<String>,
    pub q: u64,
    pub orders: Vec<usize>,
    pub terms: Vec<Vec<Elem>>,
}

impl CentralSeries {
    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            group_spec: self.group.name().map(str::to_string),
            q: self.q,
            orders: self.orders(),
            terms: self.member_lists(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::invariants_h1;
    use crate::extensions::{classify_middle, SmallType};
    use crate::group::{center, make_group};

    fn grp(s: &str) -> FiniteGroup {
        make_group(s).unwrap()
    }

    #[test]
    fn dihedral_and_modular() {
        let d = q_central_series(&grp("dihedral:8"), 2);
        assert_eq!(d.orders(), vec![8, 2, 1]);
        assert_eq!(d.term(2).to_vec(), vec![0, 2]);
        let m = q_central_series(&grp("modular:3"), 3);
        assert_eq!(m.orders(), vec![27, 3, 1]);
        // r^3 has index 3 in the normal form s^i r^j.
        assert_eq!(m.term(2).to_vec(), vec![0, 3, 6]);
        assert_eq!(q_central_series(&grp("elementary:3:3"), 3).orders(), vec![27, 1]);
        assert_eq!(q_central_series(&grp("cyclic:1"), 2).terms.len(), 1);
    }

    #[test]
    fn w_quotients() {
        let (w, _) = w_quotient(&grp("cyclic:27"), 3).unwrap();
        assert_eq!(classify_middle(&w), SmallType::Cyclic(9));
        let g = grp("semidirect:9,9,4");
        let (w, proj) = w_quotient(&g, 3).unwrap();
        assert_eq!(w.order(), 81);
        assert!(proj.is_bijective());
        let (w, _) = w_quotient(&grp("dihedral:8"), 2).unwrap();
        assert_eq!(w.order(), 8);
    }

    #[test]
    fn factors_are_central_of_exponent_q_and_dual() {
        let specs = ["dihedral:8", "quaternion:8", "dihedral:16", "modular:3", "heisenberg:3",
            "semidirect:9,9,4", "direct:cyclic:9,cyclic:3", "cyclic:16", "quaternion:16", "dihedral:12"];
        for s in specs {
            let g = grp(s);
            for q in [2u64, 3, 4] {
                let series = q_central_series(&g, q);
                for w in series.terms.windows(2) {
                    let (a, b) = (&w[0], &w[1]);
                    assert!(b.is_subgroup_of(a) && b.is_normal());
                    let (quo, proj) = quotient(&g, b).unwrap();
                    let z = center(&quo);
                    for &x in a.members() {
                        let y = proj.apply(x);
                        assert!(z.contains(y), "{s} q={q}: factor not central");
                        assert_eq!(quo.pow(y, q), 0, "{s} q={q}: exponent");
                    }
                    assert_eq!(invariants_h1(a, q).unwrap().order(), (a.order() / b.order()) as u128);
                }
            }
        }
    }

    #[test]
    fn p_groups_reach_trivial() {
        for (s, p) in [("dihedral:16", 2), ("heisenberg:5", 5), ("semidirect:9,9,4", 3)] {
            let series = q_central_series(&grp(s), p);
            assert!(series.terms.last().unwrap().is_trivial(), "{s}");
        }
        // Not a p-group: stabilizes at a nontrivial term.
        let s3 = q_central_series(&grp("dihedral:6"), 2);
        assert_eq!(s3.terms.last().unwrap().order(), 3);
    }
}
