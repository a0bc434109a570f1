//! Skew-symmetric forms and the symmetric/skew splitting of `H^2` for abelian groups.

use super::{Cochain2, H2Structure};
use crate::error::{Error, Result};
use crate::group::{abelian_invariants, Elem, FiniteGroup};
use crate::zmod::{add, gcd, mul, sub};

/// A map `G x G -> Z/m`, stored row-major; for cocycles on abelian groups it is
/// bilinear and alternating.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewForm {
    group: FiniteGroup,
    m: u64,
    values: Vec<u64>,
}

impl SkewForm {
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

    /// Alternating, and additive in the first slot (hence bilinear, being antisymmetric).
    pub fn is_alternating_bilinear(&self) -> bool {
        let g = &self.group;
        let m = self.m;
        g.elements().all(|x| self.at(x, x) == 0)
            && g.elements().all(|x| {
                g.elements().all(|z| {
                    g.generators()
                        .iter()
                        .all(|&s| self.at(g.mul(x, s), z) == add(self.at(x, z), self.at(s, z), m))
                })
            })
    }
}

/// `a_c(s, t) = c(s, t) - c(t, s)`.
pub fn skew_of(c: &Cochain2) -> SkewForm {
    let g = c.group();
    let m = c.modulus();
    let mut values = Vec::with_capacity(g.order() * g.order());
    for x in g.elements() {
        for y in g.elements() {
            values.push(sub(c.at(x, y), c.at(y, x), m));
        }
    }
    SkewForm {
        group: g.clone(),
        m,
        values,
    }
}

/// A basis `e_1, ..., e_r` of an abelian group with prime-power orders
/// (descending), so that every element is uniquely `sum x_i e_i`.
pub fn abelian_basis(g: &FiniteGroup) -> Result<Vec<(Elem, u64)>> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let mut orders = abelian_invariants(g);
    orders.reverse();
    let mut chosen: Vec<Elem> = Vec::new();
    fn dfs(g: &FiniteGroup, orders: &[u64], chosen: &mut Vec<Elem>) -> bool {
        let i = chosen.len();
        if i == orders.len() {
            return true;
        }
        let target: u64 = orders[..=i].iter().product();
        for x in g.elements() {
            if g.element_order(x) as u64 != orders[i] {
                continue;
            }
            chosen.push(x);
            let size = g.closure(chosen).iter().filter(|&&b| b).count() as u64;
            if size == target && dfs(g, orders, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let found = dfs(g, &orders, &mut chosen);
    debug_assert!(found, "finite abelian groups have bases");
    Ok(chosen.into_iter().zip(orders).collect())
}

/// Coordinates of each element in an abelian basis.
fn element_coords(g: &FiniteGroup, basis: &[(Elem, u64)]) -> Vec<Vec<u64>> {
    let mut coords = vec![Vec::new(); g.order()];
    let total: u64 = basis.iter().map(|&(_, o)| o).product();
    for t in 0..total {
        let mut rest = t;
        let mut x = 0;
        let mut c = Vec::with_capacity(basis.len());
        for &(e, o) in basis {
            let k = rest % o;
            rest /= o;
            x = g.mul(x, g.pow(e, k));
            c.push(k);
        }
        coords[x as usize] = c;
    }
    coords
}

/// The splitting `0 -> H^2_sym -> H^2 -> Skew -> 0` for an abelian group.
#[derive(Clone, Debug)]
pub struct SymSkewDecomposition {
    group: FiniteGroup,
    m: u64,
    /// Abelian basis with element orders.
    pub basis: Vec<(Elem, u64)>,
    coords: Vec<Vec<u64>>,
    /// Index pairs `(i, j)`, `i < j`, parametrizing skew forms.
    pub pairs: Vec<(usize, usize)>,
    /// `|Skew(G, Z/m)| = prod gcd(m, o_i, o_j)`.
    pub skew_order: u128,
    /// `Psi` of each `H^2` basis class, as values on basis pairs.
    pub psi_of_basis: Vec<Vec<u64>>,
    /// `H^2`-coordinates of every class with a symmetric representative.
    pub sym_classes: Vec<Vec<u64>>,
    /// `|H^2|` as enumerated.
    pub h2_order: u128,
    /// Number of skew forms hit by `Psi`.
    pub psi_image_order: u128,
}

/// Enumeration bound on `|H^2|` for [`sym_sk_decompose`].
const SYM_SKEW_ENUM_CAP: u128 = 1 << 20;

/// Splits `H^2` of an abelian group into symmetric classes and skew forms.
pub fn sym_sk_decompose(h2: &H2Structure) -> Result<SymSkewDecomposition> {
    let g = h2.group();
    let m = h2.modulus();
    let basis = abelian_basis(g)?;
    if h2.order() > SYM_SKEW_ENUM_CAP {
        return Err(Error::WorkCap {
            what: "symmetric/skew enumeration",
            work: h2.order() as usize,
            cap: SYM_SKEW_ENUM_CAP as usize,
        });
    }
    let coords = element_coords(g, &basis);
    let r = basis.len();
    let pairs: Vec<(usize, usize)> = (0..r).flat_map(|i| (i + 1..r).map(move |j| (i, j))).collect();
    let skew_order = pairs
        .iter()
        .map(|&(i, j)| gcd(m, gcd(basis[i].1, basis[j].1)) as u128)
        .product();
    let psi_vec = |c: &Cochain2| -> Vec<u64> {
        pairs
            .iter()
            .map(|&(i, j)| {
                let (a, b) = (basis[i].0, basis[j].0);
                sub(c.at(a, b), c.at(b, a), m)
            })
            .collect()
    };
    let psi_of_basis: Vec<Vec<u64>> = h2.basis().iter().map(psi_vec).collect();
    let mut sym_classes = Vec::new();
    let mut images = std::collections::BTreeSet::new();
    let mut h2_order = 0u128;
    for y in super::h1::all_coords(h2.invariant_factors()) {
        h2_order += 1;
        let mut psi = vec![0u64; pairs.len()];
        for (k, &yk) in y.iter().enumerate() {
            for (p, &v) in psi.iter_mut().zip(&psi_of_basis[k]) {
                *p = add(*p, mul(yk, v, m), m);
            }
        }
        if psi.iter().all(|&v| v == 0) {
            sym_classes.push(y);
        }
        images.insert(psi);
    }
    Ok(SymSkewDecomposition {
        group: g.clone(),
        m,
        basis,
        coords,
        pairs,
        skew_order,
        psi_of_basis,
        sym_classes,
        h2_order,
        psi_image_order: images.len() as u128,
    })
}

impl SymSkewDecomposition {
    /// Values of `Psi([c])` on the basis pairs.
    pub fn psi(&self, c: &Cochain2) -> Vec<u64> {
        self.pairs
            .iter()
            .map(|&(i, j)| {
                let (a, b) = (self.basis[i].0, self.basis[j].0);
                sub(c.at(a, b), c.at(b, a), self.m)
            })
            .collect()
    }

    /// The bilinear cocycle `f(x, y) = sum_{i<j} a_ij x_i y_j`, whose skew form
    /// takes the values `a` on the basis pairs. Errors if some `a_ij` is not
    /// killed by `gcd(o_i, o_j)`.
    pub fn section(&self, a: &[u64]) -> Result<Cochain2> {
        if a.len() != self.pairs.len() {
            return Err(Error::Shape("one value per basis pair".into()));
        }
        let m = self.m;
        for (&(i, j), &v) in self.pairs.iter().zip(a) {
            let o = gcd(self.basis[i].1, self.basis[j].1);
            if mul(v, o % m, m) != 0 {
                return Err(Error::Shape("value is not a valid skew form entry".into()));
            }
        }
        Cochain2::from_fn(&self.group, m, |x, y| {
            let (cx, cy) = (&self.coords[x as usize], &self.coords[y as usize]);
            self.pairs
                .iter()
                .zip(a)
                .fold(0, |acc, (&(i, j), &v)| add(acc, mul(v, mul(cx[i], cy[j], m), m), m))
        })
    }

    /// Every skew form, as values on basis pairs.
    pub fn skew_forms(&self) -> Vec<Vec<u64>> {
        let steps: Vec<(u64, u64)> = self
            .pairs
            .iter()
            .map(|&(i, j)| {
                let o = gcd(self.m, gcd(self.basis[i].1, self.basis[j].1));
                (o, self.m / o)
            })
            .collect();
        let orders: Vec<u64> = steps.iter().map(|&(o, _)| o).collect();
        super::h1::all_coords(&orders)
            .into_iter()
            .map(|c| c.iter().zip(&steps).map(|(&k, &(_, unit))| k * unit).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{bockstein, cup, d1, h1, h2, is_2cocycle, Cochain1};
    use crate::group::make_group;

    fn grp(s: &str) -> FiniteGroup {
        make_group(s).unwrap()
    }

    #[test]
    fn abelian_basis_generates() {
        for s in ["direct:cyclic:9,cyclic:3", "elementary:2:3", "cyclic:12", "cyclic:1"] {
            let g = grp(s);
            let b = abelian_basis(&g).unwrap();
            let els: Vec<Elem> = b.iter().map(|&(e, _)| e).collect();
            assert!(g.closure(&els).iter().all(|&x| x));
            assert_eq!(b.iter().map(|&(_, o)| o).product::<u64>(), g.order() as u64);
        }
        assert_eq!(abelian_basis(&grp("dihedral:8")).unwrap_err(), Error::NotAbelian);
    }

    #[test]
    fn symmetric_cocycle_has_zero_skew() {
        let g = grp("elementary:3:2");
        let b = h1(&g, 3).basis().to_vec();
        let c = bockstein(&b[0], 3).unwrap();
        assert!(skew_of(&c).is_zero());
        let f = Cochain1::new(&g, 3, (0..9).map(|i| (i * i) % 3).collect()).unwrap();
        assert!(skew_of(&d1(&f)).is_zero());
    }

    #[test]
    fn skew_of_cup_is_alternating_bilinear() {
        let g = grp("direct:cyclic:4,cyclic:2");
        let b = h1(&g, 2).basis().to_vec();
        let a = skew_of(&cup(&b[0], &b[1]).unwrap());
        assert!(a.is_alternating_bilinear());
        assert!(!a.is_zero());
    }

    #[test]
    fn split_sequence_counts() {
        for (spec, m) in [("elementary:2:2", 2), ("elementary:3:2", 3), ("elementary:2:3", 4), ("cyclic:9", 9),
            ("direct:cyclic:4,cyclic:2", 4)]
        {
            let s = h2(&grp(spec), m).unwrap();
            let d = sym_sk_decompose(&s).unwrap();
            assert_eq!(d.h2_order, s.order());
            assert_eq!(d.psi_image_order, d.skew_order, "{spec}: Psi onto Skew");
            assert_eq!(d.sym_classes.len() as u128 * d.skew_order, s.order(), "{spec}");
            for a in d.skew_forms() {
                let f = d.section(&a).unwrap();
                assert!(is_2cocycle(&f));
                assert_eq!(d.psi(&f), a);
            }
        }
    }

    #[test]
    fn decomposition_requires_abelian() {
        let s = h2(&grp("dihedral:8"), 2).unwrap();
        assert_eq!(sym_sk_decompose(&s).unwrap_err(), Error::NotAbelian);
    }
}
