//! `H^2(G, Z/m)`, class comparison and transgression.
//!
//! A normalized 2-cocycle is determined by its values `c(x, g)` with `x != 1`
//! and `g` a generator: the cocycle identity at `(x, y, g)` reads
//! `c(x, y g) = c(x, y) + c(x y, g) - c(y, g)`, which rebuilds every column
//! along a spanning tree. These `(|G| - 1) k` values are the coordinates used
//! throughout; coboundaries and cocycles are compared in them.

use super::{is_2cocycle_fast, Cochain1, Cochain2};
use crate::error::{Error, Result};
use crate::group::{least_section, quotient, Elem, FiniteGroup, GroupHom, SpanningTree, Subgroup};
use crate::zmod::{self, add, neg, sub, QuotientModule};

/// Default bound on `equations x coordinates^2` for building a full [`H2Structure`].
pub const H2_WORK_CAP: u128 = 100_000_000_000;

/// Coordinates of 2-cocycles on a fixed group.
#[derive(Clone, Debug)]
pub struct CocycleCoords {
    group: FiniteGroup,
    k: usize,
    tree: SpanningTree,
    /// Tree path from the identity to each element, as `(u, j)` steps `u -> u g_j`.
    paths: Vec<Vec<(Elem, usize)>>,
}

impl CocycleCoords {
    pub fn new(group: &FiniteGroup) -> CocycleCoords {
        let tree = group.spanning_tree();
        let mut paths: Vec<Vec<(Elem, usize)>> = vec![Vec::new(); group.order()];
        for &x in tree.order.iter().skip(1) {
            let (p, j) = tree.parent[x as usize].expect("non-identity has a parent");
            let mut path = paths[p as usize].clone();
            path.push((p, j));
            paths[x as usize] = path;
        }
        CocycleCoords {
            group: group.clone(),
            k: group.generators().len(),
            tree,
            paths,
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        (self.group.order() - 1) * self.k
    }

    #[inline]
    fn index(&self, x: Elem, j: usize) -> Option<usize> {
        (x != 0).then(|| (x as usize - 1) * self.k + j)
    }

    /// Coordinates of a cocycle. Only meaningful for cocycles.
    pub fn restrict(&self, c: &Cochain2) -> Vec<u64> {
        let g = &self.group;
        let mut v = vec![0u64; self.dim()];
        for x in g.elements().skip(1) {
            for (j, &s) in g.generators().iter().enumerate() {
                v[self.index(x, j).unwrap()] = c.at(x, s);
            }
        }
        v
    }

    /// The unique cocycle candidate with the given coordinates (a cocycle iff
    /// the coordinates satisfy the cocycle equations).
    pub fn expand(&self, v: &[u64], m: u64) -> Cochain2 {
        let g = &self.group;
        let n = g.order();
        let col = |z: Elem, j: usize| self.index(z, j).map_or(0, |i| v[i]);
        let mut c = vec![0u64; n * n];
        for &y in self.tree.order.iter().skip(1) {
            let (yp, j) = self.tree.parent[y as usize].unwrap();
            let sub_term = col(yp, j);
            for x in 1..n {
                let prev = c[x * n + yp as usize];
                let xyp = g.mul(x as Elem, yp);
                c[x * n + y as usize] = sub(add(prev, col(xyp, j), m), sub_term, m);
            }
        }
        Cochain2::new_unchecked(g, m, c)
    }

    /// Coordinates of `d1(delta_z)` for every `z != 1`, in element order.
    pub fn coboundary_generators(&self, m: u64) -> Vec<Vec<u64>> {
        let g = &self.group;
        let one = 1 % m;
        (1..g.order() as Elem)
            .map(|z| {
                let mut v = vec![0u64; self.dim()];
                for x in g.elements().skip(1) {
                    for (j, &s) in g.generators().iter().enumerate() {
                        let mut val = 0;
                        if x == z {
                            val = add(val, one, m);
                        }
                        if s == z {
                            val = add(val, one, m);
                        }
                        if g.mul(x, s) == z {
                            val = sub(val, one, m);
                        }
                        v[self.index(x, j).unwrap()] = val;
                    }
                }
                v
            })
            .collect()
    }

    fn non_tree_edges(&self) -> Vec<(Elem, usize)> {
        let g = &self.group;
        let mut edges = Vec::new();
        for y in g.elements() {
            for (j, &s) in g.generators().iter().enumerate() {
                if self.tree.parent[g.mul(y, s) as usize] != Some((y, j)) {
                    edges.push((y, j));
                }
            }
        }
        edges
    }

    /// Number of cocycle equations; drives the work estimate.
    pub fn equation_count(&self) -> usize {
        (self.group.order() - 1) * self.non_tree_edges().len()
    }

    /// Cocycle equations: for every `x != 1` and non-tree edge `(y, g_j)`, the
    /// tree value of `c(x, y g_j)` must equal `c(x, y) + c(x y, g_j) - c(y, g_j)`.
    fn equations(&self, m: u64) -> impl Iterator<Item = Vec<u64>> + '_ {
        let g = &self.group;
        let edges = self.non_tree_edges();
        let one = 1 % m;
        let dim = self.dim();
        (1..g.order() as Elem).flat_map(move |x| {
            let edges = edges.clone();
            edges.into_iter().filter_map(move |(y, j)| {
                let mut row = vec![0u64; dim];
                let mut bump = |z: Elem, i: usize, plus: bool| {
                    if let Some(idx) = self.index(z, i) {
                        row[idx] = if plus { add(row[idx], one, m) } else { sub(row[idx], one, m) };
                    }
                };
                let z = g.mul(y, g.generators()[j]);
                for &(u, i) in &self.paths[z as usize] {
                    bump(g.mul(x, u), i, true);
                    bump(u, i, false);
                }
                for &(u, i) in &self.paths[y as usize] {
                    bump(g.mul(x, u), i, false);
                    bump(u, i, true);
                }
                bump(g.mul(x, y), j, false);
                bump(y, j, true);
                (!zmod::is_zero(&row)).then_some(row)
            })
        })
    }
}

/// A presentation of `H^2(G, Z/m)` as a direct sum of cyclic groups.
#[derive(Clone, Debug)]
pub struct H2Structure {
    group: FiniteGroup,
    m: u64,
    coords: CocycleCoords,
    module: QuotientModule,
    basis: Vec<Cochain2>,
}

/// `H^2(G, Z/m)` under the default work cap.
pub fn h2(g: &FiniteGroup, m: u64) -> Result<H2Structure> {
    h2_with_cap(g, m, H2_WORK_CAP)
}

pub fn h2_with_cap(g: &FiniteGroup, m: u64, cap: u128) -> Result<H2Structure> {
    let coords = CocycleCoords::new(g);
    let dim = coords.dim();
    let work = coords.equation_count() as u128 * (dim as u128).pow(2);
    if work > cap {
        return Err(Error::WorkCap {
            what: "H^2 cocycle equations",
            work: usize::try_from(work).unwrap_or(usize::MAX),
            cap: usize::try_from(cap).unwrap_or(usize::MAX),
        });
    }
    let z2 = zmod::kernel(coords.equations(m), dim, m);
    let b2 = coords.coboundary_generators(m);
    let module = QuotientModule::new(m, dim, z2, b2);
    let basis = module.basis().iter().map(|v| coords.expand(v, m)).collect();
    Ok(H2Structure {
        group: g.clone(),
        m,
        coords,
        module,
        basis,
    })
}

impl H2Structure {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn basis(&self) -> &[Cochain2] {
        &self.basis
    }

    pub fn invariant_factors(&self) -> &[u64] {
        self.module.orders()
    }

    pub fn order(&self) -> u128 {
        self.module.order()
    }

    pub fn coords(&self) -> &CocycleCoords {
        &self.coords
    }

    fn check(&self, c: &Cochain2) -> Result<()> {
        if c.modulus() != self.m {
            return Err(Error::ModulusMismatch(c.modulus() as u32, self.m as u32));
        }
        if c.group() != &self.group {
            return Err(Error::Shape("cocycle lives on a different group".into()));
        }
        if !is_2cocycle_fast(c) {
            return Err(Error::NotCocycle);
        }
        Ok(())
    }

    /// Coordinates of the class of `c` and a witness `f` with
    /// `c = sum coords_i basis_i + d1(f)`.
    pub fn decompose(&self, c: &Cochain2) -> Result<(Vec<u64>, Cochain1)> {
        self.check(c)?;
        let m = self.m;
        let v = self.coords.restrict(c);
        let (a, _) = self.module.solve(&v).expect("every cocycle lies in Z^2");
        let coords = self.module.coords_of_coeffs(&a);
        let mut r = v;
        for (k, &ck) in coords.iter().enumerate() {
            zmod::axpy(&mut r, neg(ck, m), &self.module.basis()[k], m);
        }
        let b = self.module.sub_witness(&r).expect("difference is a coboundary");
        let mut f = vec![0u64; self.group.order()];
        f[1..].copy_from_slice(&b);
        Ok((coords, Cochain1::new(&self.group, m, f)?))
    }

    pub fn class_of(&self, c: &Cochain2) -> Result<Vec<u64>> {
        self.decompose(c).map(|(coords, _)| coords)
    }

    pub fn is_coboundary(&self, c: &Cochain2) -> Result<bool> {
        Ok(self.class_of(c)?.iter().all(|&x| x == 0))
    }

    /// The cocycle `sum coords_i basis_i`.
    pub fn combine(&self, coords: &[u64]) -> Cochain2 {
        let terms: Vec<(u64, &Cochain2)> = coords.iter().copied().zip(&self.basis).collect();
        Cochain2::combination(&self.group, self.m, &terms)
    }
}

/// The subgroup of `H^2(G, Z/m)` spanned by a family of cocycles, without
/// computing all of `Z^2`. Works for any group size.
#[derive(Clone, Debug)]
pub struct ClassSpace {
    group: FiniteGroup,
    m: u64,
    coords: CocycleCoords,
    module: QuotientModule,
}

impl ClassSpace {
    /// Callers must pass cocycles.
    pub fn new(group: &FiniteGroup, m: u64, family: &[Cochain2]) -> ClassSpace {
        ClassSpace::with_coords(CocycleCoords::new(group), m, family)
    }

    pub fn with_coords(coords: CocycleCoords, m: u64, family: &[Cochain2]) -> ClassSpace {
        let sup: Vec<Vec<u64>> = family.iter().map(|c| coords.restrict(c)).collect();
        let sub = coords.coboundary_generators(m);
        let module = QuotientModule::new(m, coords.dim(), sup, sub);
        ClassSpace {
            group: coords.group().clone(),
            m,
            coords,
            module,
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// Orders of a cyclic decomposition of the span.
    pub fn orders(&self) -> &[u64] {
        self.module.orders()
    }

    pub fn order(&self) -> u128 {
        self.module.order()
    }

    /// Whether the cocycle `c` is a coboundary.
    pub fn is_coboundary(&self, c: &Cochain2) -> bool {
        self.module.in_sub(&self.coords.restrict(c))
    }

    /// Coordinates of `[c]` in the span, or `None` if `[c]` lies outside it.
    pub fn coords_of(&self, c: &Cochain2) -> Option<Vec<u64>> {
        self.module.decompose(&self.coords.restrict(c))
    }

    /// Coordinates of the class of `sum a_i family_i`.
    pub fn coords_of_combination(&self, a: &[u64]) -> Vec<u64> {
        self.module.coords_of_coeffs(a)
    }

    /// Generators of `{a : sum a_i [family_i] = 0}`.
    pub fn relations(&self) -> &[Vec<u64>] {
        self.module.relations()
    }

    /// Whether two cocycles are cohomologous.
    pub fn same_class(&self, a: &Cochain2, b: &Cochain2) -> bool {
        let m = self.m;
        let mut v = self.coords.restrict(a);
        let w = self.coords.restrict(b);
        for (x, &y) in v.iter_mut().zip(&w) {
            *x = sub(*x, y, m);
        }
        self.module.in_sub(&v)
    }
}

/// Output of [`transgression`]: the cocycle lives on `quotient = G/M`.
#[derive(Clone, Debug)]
pub struct Transgression {
    pub quotient: FiniteGroup,
    pub projection: GroupHom,
    /// Least element of each coset.
    pub section: Vec<Elem>,
    pub cocycle: Cochain2,
}

/// Transgression of a `G`-invariant character `phi` of `M` (on `M`'s local group):
/// `c(x, y) = phi(s(x) s(y) s(xy)^-1)` for the least-element section `s`.
pub fn transgression(g: &FiniteGroup, m_sub: &Subgroup, phi: &Cochain1) -> Result<Transgression> {
    if m_sub.parent() != g {
        return Err(Error::Shape("M does not live in G".into()));
    }
    let (local, emb) = m_sub.as_group();
    if phi.group() != local {
        return Err(Error::Shape("phi must live on M's local group".into()));
    }
    if !phi.is_cocycle() {
        return Err(Error::NotCocycle);
    }
    for &s in g.generators() {
        for (l, &x) in emb.iter().enumerate() {
            let c = m_sub.local_index(g.conj(x, s)).ok_or(Error::NotNormal)?;
            if phi.at(c) != phi.at(l as Elem) {
                return Err(Error::NotInvariant);
            }
        }
    }
    let (q, proj) = quotient(g, m_sub)?;
    let section = least_section(&proj);
    let cocycle = Cochain2::from_fn(&q, phi.modulus(), |x, y| {
        let a = g.mul(section[x as usize], section[y as usize]);
        let b = g.mul(a, g.inv(section[q.mul(x, y) as usize]));
        phi.at(m_sub.local_index(b).expect("lands in M"))
    })?;
    if !is_2cocycle_fast(&cocycle) {
        return Err(Error::NotCocycle);
    }
    Ok(Transgression {
        quotient: q,
        projection: proj,
        section,
        cocycle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{bockstein, cup, d1, h1, inflate, invariants_h1, is_2cocycle, restrict1};
    use crate::group::{make_group, normal_subgroups};
    use crate::zmod::gcd;
    use proptest::prelude::*;

    fn grp(s: &str) -> FiniteGroup {
        make_group(s).unwrap()
    }

    /// `|H^2|` from ranks of the full (unrestricted) normalized cochain complex,
    /// via brute-force span sizes over small `Z/m`.
    fn h2_order_brute(g: &FiniteGroup, m: u64) -> u128 {
        let n = g.order();
        let idx = |x: usize, y: usize| (x - 1) * (n - 1) + (y - 1);
        let dim = (n - 1) * (n - 1);
        // Z^2 = kernel of the full d2 on normalized cochains.
        let mut rows = Vec::new();
        for s in 1..n {
            for t in 1..n {
                for u in 1..n {
                    let mut row = vec![0u64; dim];
                    let mut bump = |x: usize, y: usize, plus: bool| {
                        if x != 0 && y != 0 {
                            let i = idx(x, y);
                            row[i] = if plus { add(row[i], 1, m) } else { sub(row[i], 1, m) };
                        }
                    };
                    let st = g.mul(s as Elem, t as Elem) as usize;
                    let tu = g.mul(t as Elem, u as Elem) as usize;
                    bump(t, u, true);
                    bump(st, u, false);
                    bump(s, tu, true);
                    bump(s, t, false);
                    rows.push(row);
                }
            }
        }
        let z2 = zmod::kernel(rows, dim, m);
        let mut zspan = zmod::Echelon::new(m, dim);
        for z in z2 {
            zspan.insert(z);
        }
        let mut bspan = zmod::Echelon::new(m, dim);
        for z in 1..n {
            let mut v = vec![0u64; dim];
            for x in 1..n {
                for y in 1..n {
                    let mut val = 0;
                    if x == z {
                        val = add(val, 1, m);
                    }
                    if y == z {
                        val = add(val, 1, m);
                    }
                    if g.mul(x as Elem, y as Elem) as usize == z {
                        val = sub(val, 1, m);
                    }
                    v[idx(x, y)] = val;
                }
            }
            bspan.insert(v);
        }
        zspan.span_order() / bspan.span_order()
    }

    #[test]
    fn cyclic_h2_orders() {
        for (n, m) in [(2u64, 2u64), (4, 2), (9, 3), (6, 4), (8, 12)] {
            let g = grp(&format!("cyclic:{n}"));
            let s = h2(&g, m).unwrap();
            assert_eq!(s.order(), gcd(n, m) as u128, "Z/{n} mod {m}");
        }
    }

    #[test]
    fn h2_matches_full_complex() {
        for (spec, m) in [("elementary:2:2", 2), ("cyclic:4", 4), ("elementary:3:2", 3), ("dihedral:8", 2),
            ("quaternion:8", 2), ("dihedral:6", 3), ("direct:cyclic:4,cyclic:2", 4)]
        {
            let g = grp(spec);
            assert_eq!(h2(&g, m).unwrap().order(), h2_order_brute(&g, m), "{spec} mod {m}");
        }
    }

    #[test]
    fn elementary_rank_two_mod_three() {
        let s = h2(&grp("elementary:3:2"), 3).unwrap();
        assert_eq!(s.invariant_factors(), &[3, 3, 3]);
    }

    #[test]
    fn trivial_group_h2() {
        let s = h2(&grp("cyclic:1"), 5).unwrap();
        assert_eq!(s.order(), 1);
        assert!(s.basis().is_empty());
    }

    #[test]
    fn basis_decomposes_to_unit_vectors() {
        for (spec, m) in [("elementary:2:3", 2), ("direct:cyclic:4,cyclic:2", 4), ("heisenberg:3", 3)] {
            let s = h2(&grp(spec), m).unwrap();
            for (i, b) in s.basis().iter().enumerate() {
                assert!(is_2cocycle(b));
                let (coords, w) = s.decompose(b).unwrap();
                let mut unit = vec![0; s.basis().len()];
                unit[i] = 1;
                assert_eq!(coords, unit);
                assert!(w.is_zero());
            }
        }
    }

    #[test]
    fn work_cap_is_reported() {
        let err = h2_with_cap(&grp("elementary:2:3"), 2, 10).unwrap_err();
        assert!(matches!(err, Error::WorkCap { .. }));
    }

    #[test]
    fn decompose_rejects_non_cocycles() {
        let g = grp("cyclic:4");
        let s = h2(&g, 2).unwrap();
        let mut v = vec![0; 16];
        v[5] = 1;
        let c = Cochain2::new(&g, 2, v).unwrap();
        assert_eq!(s.decompose(&c).unwrap_err(), Error::NotCocycle);
    }

    #[test]
    fn transgression_on_z4() {
        let g = grp("cyclic:4");
        let m = Subgroup::generated(&g, &[2]);
        let inv = invariants_h1(&m, 2).unwrap();
        let phi = inv.basis()[0].clone();
        let t = transgression(&g, &m, &phi).unwrap();
        let s = h2(&t.quotient, 2).unwrap();
        assert!(!s.is_coboundary(&t.cocycle).unwrap());
        // The class is the Bockstein of the identity character of Z/2.
        let id = h1(&t.quotient, 2).basis()[0].clone();
        let beta = bockstein(&id, 2).unwrap();
        assert_eq!(s.class_of(&t.cocycle).unwrap(), s.class_of(&beta).unwrap());
        let zero = transgression(&g, &m, &phi.scale(0)).unwrap();
        assert!(zero.cocycle.is_zero());
    }

    #[test]
    fn transgression_rejects_non_invariant() {
        let g = grp("dihedral:8");
        let v = Subgroup::generated(&g, &[2, 4]);
        // A character of the Klein subgroup <r^2, s> that is not conjugation-invariant.
        let (local, emb) = v.as_group();
        let vals: Vec<u64> = emb.iter().map(|&x| u64::from(x == 2 || x == 6)).collect();
        let phi = Cochain1::new(local, 2, vals).unwrap();
        assert!(phi.is_cocycle());
        assert_eq!(transgression(&g, &v, &phi).unwrap_err(), Error::NotInvariant);
    }

    /// Exactness of `H^1(G) -> H^1(N)^G -> H^2(G/N) -> H^2(G)` at the two middle terms.
    fn check_five_term(spec: &str, q: u64) {
        let g = grp(spec);
        let h1g = h1(&g, q);
        for n in normal_subgroups(&g) {
            let inv = invariants_h1(&n, q).unwrap();
            let restricted: Vec<Vec<u64>> = h1g
                .elements()
                .iter()
                .map(|f| restrict1(f, &n).unwrap().values().to_vec())
                .collect();
            let mut trg_zero = 0u128;
            let mut kernel_classes = Vec::new();
            let (quot, proj) = quotient(&g, &n).unwrap();
            let s = h2(&quot, q).unwrap();
            let coords_g = CocycleCoords::new(&g);
            let space_g = ClassSpace::with_coords(coords_g, q, &[]);
            for phi in inv.elements() {
                let t = transgression(&g, &n, &phi).unwrap();
                let c = t.cocycle.rehome(&quot).unwrap();
                let class = s.class_of(&c).unwrap();
                let is_zero = class.iter().all(|&x| x == 0);
                assert_eq!(is_zero, restricted.contains(&phi.values().to_vec()), "{spec} ker trg = im res");
                if is_zero {
                    trg_zero += 1;
                }
                // inf(trg(phi)) = 0 in H^2(G).
                assert!(space_g.is_coboundary(&inflate(&c, &proj).unwrap()), "{spec} inf trg = 0");
                kernel_classes.push(class);
            }
            kernel_classes.sort();
            kernel_classes.dedup();
            // ker(inf) has exactly |H^1(N)^G| / |ker trg| elements.
            let mut inf_kernel = 0u128;
            for coords in crate::cohomology::h1::all_coords(s.invariant_factors()) {
                let c = s.combine(&coords);
                if space_g.is_coboundary(&inflate(&c, &proj).unwrap()) {
                    inf_kernel += 1;
                }
            }
            assert_eq!(inf_kernel * trg_zero, inv.order(), "{spec} ker inf = im trg");
            assert_eq!(kernel_classes.len() as u128, inf_kernel);
        }
    }

    #[test]
    fn five_term_exactness_small() {
        for (spec, q) in [("dihedral:8", 2), ("quaternion:8", 2), ("cyclic:8", 2), ("direct:cyclic:4,cyclic:2", 2),
            ("cyclic:4", 4), ("heisenberg:3", 3), ("modular:3", 3), ("cyclic:9", 3)]
        {
            check_five_term(spec, q);
        }
    }

    proptest! {
        #[test]
        fn decomposition_round_trips(seed in prop::collection::vec(0u64..64, 1..6), which in 0usize..3) {
            let (spec, m) = [("dihedral:8", 2u64), ("direct:cyclic:4,cyclic:2", 4), ("elementary:3:2", 3)][which];
            let g = grp(spec);
            let s = h2(&g, m).unwrap();
            let chars = h1(&g, m).elements();
            let a = &chars[seed[0] as usize % chars.len()];
            let b = &chars[seed[seed.len() - 1] as usize % chars.len()];
            let mut f: Vec<u64> = (0..g.order()).map(|i| seed[i % seed.len()].wrapping_mul(i as u64 * 31 + 1) % m).collect();
            f[0] = 0;
            let f = Cochain1::new(&g, m, f).unwrap();
            let c = cup(a, b).unwrap().add(&bockstein(a, m).unwrap()).unwrap().add(&d1(&f)).unwrap();
            let (coords, w) = s.decompose(&c).unwrap();
            let rebuilt = s.combine(&coords).add(&d1(&w)).unwrap();
            prop_assert_eq!(rebuilt.values(), c.values());
        }
    }
}
