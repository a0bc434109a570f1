//! Normalized inhomogeneous cochains with trivial `Z/m` coefficients, and the
//! cohomology computations built on them.

pub(crate) mod h1;
mod h2;
mod skew;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, GroupHom, SpanningTree, Subgroup};
use crate::zmod::{self, add, mul, sub};

pub use h1::{h1, invariants_h1, kernel_in_parent, H1};
pub use h2::{h2, h2_with_cap, transgression, ClassSpace, CocycleCoords, H2Structure, Transgression, H2_WORK_CAP};
pub use skew::{abelian_basis, skew_of, sym_sk_decompose, SkewForm, SymSkewDecomposition};

/// A normalized 1-cochain `G -> Z/m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain1 {
    group: FiniteGroup,
    m: u64,
    values: Vec<u64>,
}

/// A normalized 2-cochain `G x G -> Z/m`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain2 {
    group: FiniteGroup,
    m: u64,
    values: Vec<u64>,
}

/// Canonical JSON form of a 2-cochain.
#[derive(Clone, Debug, Serialize)]
pub struct CochainJson {
    pub group_spec: Option<String>,
    pub modulus: u64,
    pub values: Vec<u64>,
}

impl Cochain1 {
    pub fn new(group: &FiniteGroup, m: u64, values: Vec<u64>) -> Result<Cochain1> {
        if m == 0 {
            return Err(Error::Shape("modulus must be positive".into()));
        }
        if values.len() != group.order() || values.iter().any(|&v| v >= m) {
            return Err(Error::Shape("1-cochain values do not match the group".into()));
        }
        if values[0] != 0 {
            return Err(Error::Shape("1-cochain is not normalized".into()));
        }
        Ok(Cochain1 {
            group: group.clone(),
            m,
            values,
        })
    }

    pub fn zero(group: &FiniteGroup, m: u64) -> Cochain1 {
        Cochain1 {
            group: group.clone(),
            m,
            values: vec![0; group.order()],
        }
    }

    /// The 1-cochain of a homomorphism into a cyclic group presented as `Z/m`.
    pub fn from_hom(f: &GroupHom, m: u64) -> Result<Cochain1> {
        if f.codomain().order() as u64 != m {
            return Err(Error::ModulusMismatch(f.codomain().order() as u32, m as u32));
        }
        Cochain1::new(f.domain(), m, f.images().iter().map(|&y| y as u64).collect())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    #[inline]
    pub fn at(&self, x: Elem) -> u64 {
        self.values[x as usize]
    }

    /// Whether this is a homomorphism, i.e. a 1-cocycle.
    pub fn is_cocycle(&self) -> bool {
        let g = &self.group;
        g.elements().all(|x| {
            g.generators()
                .iter()
                .all(|&s| self.at(g.mul(x, s)) == add(self.at(x), self.at(s), self.m))
        })
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn add(&self, other: &Cochain1) -> Result<Cochain1> {
        self.check_compatible(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| add(a, b, self.m))
            .collect();
        Ok(Cochain1 { values, ..self.clone() })
    }

    pub fn scale(&self, c: u64) -> Cochain1 {
        let values = self.values.iter().map(|&a| mul(a, c % self.m, self.m)).collect();
        Cochain1 { values, ..self.clone() }
    }

    pub fn neg(&self) -> Cochain1 {
        self.scale(self.m - 1)
    }

    /// Kernel of a 1-cocycle, as a subgroup.
    pub fn kernel(&self) -> Subgroup {
        Subgroup::new(&self.group, &self.group.elements().filter(|&x| self.at(x) == 0).collect::<Vec<_>>())
            .expect("kernel of a homomorphism is a subgroup")
    }

    fn check_compatible(&self, other: &Cochain1) -> Result<()> {
        if self.m != other.m {
            return Err(Error::ModulusMismatch(self.m as u32, other.m as u32));
        }
        if self.group != other.group {
            return Err(Error::Shape("cochains live on different groups".into()));
        }
        Ok(())
    }
}

impl Cochain2 {
    pub fn new(group: &FiniteGroup, m: u64, values: Vec<u64>) -> Result<Cochain2> {
        let n = group.order();
        if m == 0 {
            return Err(Error::Shape("modulus must be positive".into()));
        }
        if values.len() != n * n || values.iter().any(|&v| v >= m) {
            return Err(Error::Shape("2-cochain values do not match the group".into()));
        }
        if (0..n).any(|x| values[x] != 0 || values[x * n] != 0) {
            return Err(Error::Shape("2-cochain is not normalized".into()));
        }
        Ok(Cochain2 {
            group: group.clone(),
            m,
            values,
        })
    }

    pub(crate) fn new_unchecked(group: &FiniteGroup, m: u64, values: Vec<u64>) -> Cochain2 {
        Cochain2 {
            group: group.clone(),
            m,
            values,
        }
    }

    /// Builds a cochain from a function, which must vanish when either argument is `0`.
    pub fn from_fn(group: &FiniteGroup, m: u64, f: impl Fn(Elem, Elem) -> u64) -> Result<Cochain2> {
        let mut values = Vec::with_capacity(group.order() * group.order());
        for x in group.elements() {
            for y in group.elements() {
                values.push(f(x, y) % m);
            }
        }
        Cochain2::new(group, m, values)
    }

    pub fn zero(group: &FiniteGroup, m: u64) -> Cochain2 {
        Cochain2::new_unchecked(group, m, vec![0; group.order() * group.order()])
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    #[inline]
    pub fn at(&self, x: Elem, y: Elem) -> u64 {
        self.values[x as usize * self.group.order() + y as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn add(&self, other: &Cochain2) -> Result<Cochain2> {
        if self.m != other.m {
            return Err(Error::ModulusMismatch(self.m as u32, other.m as u32));
        }
        if self.group != other.group {
            return Err(Error::Shape("cochains live on different groups".into()));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| add(a, b, self.m))
            .collect();
        Ok(Cochain2::new_unchecked(&self.group, self.m, values))
    }

    pub fn scale(&self, c: u64) -> Cochain2 {
        let values = self.values.iter().map(|&a| mul(a, c % self.m, self.m)).collect();
        Cochain2::new_unchecked(&self.group, self.m, values)
    }

    pub fn neg(&self) -> Cochain2 {
        self.scale(self.m - 1)
    }

    /// Linear combination `sum c_i x_i` of cochains on one group.
    pub fn combination(group: &FiniteGroup, m: u64, terms: &[(u64, &Cochain2)]) -> Cochain2 {
        let mut values = vec![0u64; group.order() * group.order()];
        for &(c, x) in terms {
            debug_assert_eq!(x.m, m);
            zmod::axpy(&mut values, c % m, &x.values, m);
        }
        Cochain2::new_unchecked(group, m, values)
    }

    /// Same values, re-homed on an equal group object (identical table).
    pub fn rehome(&self, group: &FiniteGroup) -> Result<Cochain2> {
        if &self.group != group {
            return Err(Error::Shape("groups differ".into()));
        }
        Ok(Cochain2::new_unchecked(group, self.m, self.values.clone()))
    }

    pub fn to_json(&self) -> CochainJson {
        CochainJson {
            group_spec: self.group.name().map(str::to_string),
            modulus: self.m,
            values: self.values.clone(),
        }
    }
}

/// Coboundary `(df)(s, t) = f(s) + f(t) - f(st)`.
pub fn d1(f: &Cochain1) -> Cochain2 {
    let g = &f.group;
    let m = f.m;
    let mut values = Vec::with_capacity(g.order() * g.order());
    for x in g.elements() {
        for y in g.elements() {
            values.push(sub(add(f.at(x), f.at(y), m), f.at(g.mul(x, y)), m));
        }
    }
    Cochain2::new_unchecked(g, m, values)
}

/// `(dc)(s, t, u) = c(t, u) - c(st, u) + c(s, tu) - c(s, t)`.
#[inline]
pub fn d2_at(c: &Cochain2, s: Elem, t: Elem, u: Elem) -> u64 {
    let g = &c.group;
    let m = c.m;
    let a = add(c.at(t, u), c.at(s, g.mul(t, u)), m);
    let b = add(c.at(g.mul(s, t), u), c.at(s, t), m);
    sub(a, b, m)
}

/// Full cocycle check over all triples.
pub fn is_2cocycle(c: &Cochain2) -> bool {
    let g = &c.group;
    g.elements()
        .all(|s| g.elements().all(|t| g.elements().all(|u| d2_at(c, s, t, u) == 0)))
}

/// Cocycle check with the last argument restricted to generators.
///
/// For a normalized cochain this is equivalent to the full check: the
/// identity `d(dc) = 0` evaluated at `(w, x, y, g)` gives
/// `(dc)(w, x, y g) = (dc)(w, x, y)` once every `(dc)(-, -, g)` vanishes.
pub fn is_2cocycle_fast(c: &Cochain2) -> bool {
    let g = &c.group;
    g.generators()
        .iter()
        .all(|&u| g.elements().all(|s| g.elements().all(|t| d2_at(c, s, t, u) == 0)))
}

/// Cup product cocycle `(s, t) -> psi(s) psi'(t)`.
pub fn cup(psi: &Cochain1, psi2: &Cochain1) -> Result<Cochain2> {
    psi.check_compatible(psi2)?;
    let g = &psi.group;
    let m = psi.m;
    let mut values = Vec::with_capacity(g.order() * g.order());
    for x in g.elements() {
        for y in g.elements() {
            values.push(mul(psi.at(x), psi2.at(y), m));
        }
    }
    Ok(Cochain2::new_unchecked(g, m, values))
}

/// Connecting map for `0 -> Z/n -> Z/mn -> Z/m -> 0`, using the least lift.
///
/// The lift `l` takes values in `0..m`, so `l(s) + l(t) - l(st)` is `0` or `m`
/// and the cocycle is the carry. Errors if `psi` is not a homomorphism.
pub fn bockstein(psi: &Cochain1, n: u64) -> Result<Cochain2> {
    bockstein_with_lift(psi, n, psi.values())
}

/// Bockstein with an arbitrary lift `lift[x] ≡ psi(x) (mod m)`, `lift[x] < m n`.
pub fn bockstein_with_lift(psi: &Cochain1, n: u64, lift: &[u64]) -> Result<Cochain2> {
    if !psi.is_cocycle() {
        return Err(Error::NotCocycle);
    }
    let m = psi.m;
    let mn = m * n;
    if lift.len() != psi.values.len() || lift[0] != 0 {
        return Err(Error::Shape("lift must be a normalized cochain".into()));
    }
    if lift.iter().zip(&psi.values).any(|(&l, &v)| l >= mn || l % m != v) {
        return Err(Error::Shape("lift does not reduce to psi".into()));
    }
    let g = &psi.group;
    let mut values = Vec::with_capacity(g.order() * g.order());
    for x in g.elements() {
        for y in g.elements() {
            let chi = sub(add(lift[x as usize], lift[y as usize], mn), lift[g.mul(x, y) as usize], mn);
            debug_assert_eq!(chi % m, 0);
            values.push(chi / m);
        }
    }
    Ok(Cochain2::new_unchecked(g, n, values))
}

/// Restriction of a 1-cochain to a subgroup's local group.
pub fn restrict1(f: &Cochain1, h: &Subgroup) -> Result<Cochain1> {
    if h.parent() != &f.group {
        return Err(Error::Shape("subgroup of a different group".into()));
    }
    let (local, emb) = h.as_group();
    Ok(Cochain1 {
        group: local.clone(),
        m: f.m,
        values: emb.iter().map(|&x| f.at(x)).collect(),
    })
}

/// Restriction of a 2-cochain to a subgroup's local group.
pub fn restrict(c: &Cochain2, h: &Subgroup) -> Result<Cochain2> {
    if h.parent() != &c.group {
        return Err(Error::Shape("subgroup of a different group".into()));
    }
    let (local, emb) = h.as_group();
    let mut values = Vec::with_capacity(emb.len() * emb.len());
    for &x in emb {
        for &y in emb {
            values.push(c.at(x, y));
        }
    }
    Ok(Cochain2::new_unchecked(local, c.m, values))
}

/// Pullback of a 2-cochain on `G/N` along the projection `G -> G/N`.
pub fn inflate(c: &Cochain2, proj: &GroupHom) -> Result<Cochain2> {
    if proj.codomain() != &c.group {
        return Err(Error::Shape("projection does not land in the cochain's group".into()));
    }
    let g = proj.domain();
    let mut values = Vec::with_capacity(g.order() * g.order());
    for x in g.elements() {
        for y in g.elements() {
            values.push(c.at(proj.apply(x), proj.apply(y)));
        }
    }
    Ok(Cochain2::new_unchecked(g, c.m, values))
}

/// Pullback of a 1-cochain along a homomorphism into its group.
pub fn inflate1(f: &Cochain1, map: &GroupHom) -> Result<Cochain1> {
    if map.codomain() != &f.group {
        return Err(Error::Shape("map does not land in the cochain's group".into()));
    }
    Ok(Cochain1 {
        group: map.domain().clone(),
        m: f.m,
        values: map.images().iter().map(|&y| f.at(y)).collect(),
    })
}

/// Coefficient vector of each element over the generators along the spanning tree:
/// a homomorphism `f` satisfies `f(x) = sum_i w_x[i] f(g_i)`.
pub(crate) fn tree_words(g: &FiniteGroup, tree: &SpanningTree, m: u64) -> Vec<Vec<u64>> {
    let k = g.generators().len();
    let mut words = vec![vec![0u64; k]; g.order()];
    for &x in tree.order.iter().skip(1) {
        let (p, j) = tree.parent[x as usize].expect("non-identity has a parent");
        let mut w = words[p as usize].clone();
        w[j] = add(w[j], 1 % m, m);
        words[x as usize] = w;
    }
    words
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_group;
    use proptest::prelude::*;

    fn grp(s: &str) -> FiniteGroup {
        make_group(s).unwrap()
    }

    fn random_cochain(g: &FiniteGroup, m: u64, seed: &[u64]) -> Cochain1 {
        let mut v: Vec<u64> = (0..g.order()).map(|i| seed[i % seed.len()].wrapping_mul(i as u64 + 7) % m).collect();
        v[0] = 0;
        Cochain1::new(g, m, v).unwrap()
    }

    #[test]
    fn coboundaries_of_homs_vanish() {
        let g = grp("direct:cyclic:4,cyclic:2");
        for f in h1(&g, 4).elements() {
            assert!(d1(&f).is_zero());
        }
    }

    #[test]
    fn cup_of_characters_on_klein_is_cocycle() {
        let g = grp("elementary:2:2");
        let basis = h1(&g, 2).basis().to_vec();
        let c = cup(&basis[0], &basis[1]).unwrap();
        assert!(is_2cocycle(&c));
        assert!(cup(&Cochain1::zero(&g, 2), &basis[1]).unwrap().is_zero());
    }

    #[test]
    fn cup_rejects_mixed_moduli() {
        let g = grp("cyclic:6");
        let a = Cochain1::zero(&g, 2);
        let b = Cochain1::zero(&g, 3);
        assert_eq!(cup(&a, &b).unwrap_err(), Error::ModulusMismatch(2, 3));
    }

    #[test]
    fn bockstein_of_non_hom_errors() {
        let g = grp("cyclic:4");
        let f = Cochain1::new(&g, 2, vec![0, 1, 1, 0]).unwrap();
        assert_eq!(bockstein(&f, 2).unwrap_err(), Error::NotCocycle);
    }

    #[test]
    fn restriction_to_whole_group_is_identity() {
        let g = grp("dihedral:8");
        let basis = h1(&g, 2).basis().to_vec();
        let c = cup(&basis[0], &basis[1]).unwrap();
        let r = restrict(&c, &Subgroup::whole(&g)).unwrap();
        assert_eq!(r.values(), c.values());
    }

    #[test]
    fn inflate_then_restrict_to_kernel_vanishes() {
        let g = grp("modular:3");
        let n = crate::group::center(&g);
        let (q, proj) = crate::group::quotient(&g, &n).unwrap();
        let basis = h1(&q, 3).basis().to_vec();
        let c = cup(&basis[0], &basis[1]).unwrap().add(&bockstein(&basis[0], 3).unwrap()).unwrap();
        let back = restrict(&inflate(&c, &proj).unwrap(), &n).unwrap();
        assert!(back.is_zero());
    }

    proptest! {
        #[test]
        fn d_squared_vanishes(seed in prop::collection::vec(0u64..1000, 1..8), which in 0usize..4) {
            let (spec, m) = [("dihedral:8", 2), ("quaternion:8", 4), ("heisenberg:3", 3), ("cyclic:6", 6)][which];
            let g = grp(spec);
            let f = random_cochain(&g, m, &seed);
            prop_assert!(is_2cocycle(&d1(&f)));
        }

        #[test]
        fn fast_cocycle_check_agrees(seed in prop::collection::vec(0u64..4, 16..64)) {
            let g = grp("direct:cyclic:2,cyclic:4");
            let base = cup(&h1(&g, 2).basis()[0], &h1(&g, 2).basis()[1]).unwrap();
            // Perturb a normalized cocycle at a few entries.
            let n = g.order();
            let mut v = base.values().to_vec();
            for (i, &s) in seed.iter().enumerate() {
                let x = 1 + (i * 5) % (n - 1);
                let y = 1 + (i * 3 + s as usize) % (n - 1);
                if s == 0 {
                    v[x * n + y] ^= 1;
                }
            }
            let c = Cochain2::new(&g, 2, v).unwrap();
            prop_assert_eq!(is_2cocycle(&c), is_2cocycle_fast(&c));
        }
    }
}
