use proptest::prelude::*;

use descent3::cohomology::{bockstein, cup, h1, is_2cocycle, ClassSpace, Cochain1};
use descent3::extensions::CentralExtension;
use descent3::group::{make_group, FiniteGroup};
use descent3::series::q_central_series;

const GROUPS: &[(&str, u64)] = &[
    ("dihedral:8", 2),
    ("quaternion:8", 2),
    ("direct:cyclic:4,cyclic:2", 2),
    ("elementary:2:3", 2),
    ("cyclic:9", 3),
    ("modular:3", 3),
    ("heisenberg:3", 3),
    ("elementary:3:2", 3),
];

fn pick(i: usize, coords: &[u64], g: &FiniteGroup, p: u64) -> Cochain1 {
    let h = h1(g, p);
    let c: Vec<u64> = h.orders().iter().enumerate().map(|(j, &o)| coords[(i + j) % coords.len()] % o).collect();
    h.combine(&c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn baer_sum_matches_cocycle_sum(gi in 0..GROUPS.len(), a in prop::collection::vec(0u64..9, 4)) {
        let (s, p) = GROUPS[gi];
        let g = make_group(s).unwrap();
        let (x, y, z) = (pick(0, &a, &g, p), pick(1, &a, &g, p), pick(2, &a, &g, p));
        let c1 = cup(&x, &y).unwrap();
        let c2 = cup(&y, &z).unwrap().add(&bockstein(&x, p).unwrap()).unwrap();
        let e1 = CentralExtension::from_cocycle(&c1).unwrap();
        let e2 = CentralExtension::from_cocycle(&c2).unwrap();
        let sum = CentralExtension::from_cocycle(&c1.add(&c2).unwrap()).unwrap();
        prop_assert!(e1.baer_sum(&e2).unwrap().is_equivalent(&sum).unwrap());
        // Commutative up to equivalence.
        prop_assert!(e2.baer_sum(&e1).unwrap().is_equivalent(&sum).unwrap());
    }

    #[test]
    fn cup_is_bilinear_and_bockstein_additive(gi in 0..GROUPS.len(), a in prop::collection::vec(0u64..9, 4)) {
        let (s, p) = GROUPS[gi];
        let g = make_group(s).unwrap();
        let (x, y, z) = (pick(0, &a, &g, p), pick(1, &a, &g, p), pick(3, &a, &g, p));
        let lhs = cup(&x.add(&y).unwrap(), &z).unwrap();
        prop_assert!(is_2cocycle(&lhs));
        prop_assert_eq!(lhs, cup(&x, &z).unwrap().add(&cup(&y, &z).unwrap()).unwrap());
        let space = ClassSpace::new(&g, p, &[]);
        let b = bockstein(&x.add(&y).unwrap(), p).unwrap();
        let b2 = bockstein(&x, p).unwrap().add(&bockstein(&y, p).unwrap()).unwrap();
        prop_assert!(is_2cocycle(&b));
        prop_assert!(space.same_class(&b, &b2));
    }

    #[test]
    fn extension_round_trips_its_cocycle(gi in 0..GROUPS.len(), a in prop::collection::vec(0u64..9, 4)) {
        let (s, p) = GROUPS[gi];
        let g = make_group(s).unwrap();
        let c = cup(&pick(0, &a, &g, p), &pick(2, &a, &g, p)).unwrap();
        let e = CentralExtension::from_cocycle(&c).unwrap();
        prop_assert_eq!(e.middle().order(), g.order() * p as usize);
        let back = e.to_cocycle();
        prop_assert!(ClassSpace::new(e.base(), p, &[]).same_class(&back.rehome(e.base()).unwrap(), &c.rehome(e.base()).unwrap()));
    }

    #[test]
    fn series_is_descending_and_normal(gi in 0..GROUPS.len(), q in prop::sample::select(vec![2u64, 3, 4, 9])) {
        let g = make_group(GROUPS[gi].0).unwrap();
        let s = q_central_series(&g, q);
        for w in s.terms.windows(2) {
            prop_assert!(w[1].is_subgroup_of(&w[0]));
            prop_assert!(w[1].is_normal());
        }
    }
}
