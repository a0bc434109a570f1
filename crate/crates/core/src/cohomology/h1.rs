//! `H^1(G, Z/m) = Hom(G, Z/m)` and the invariants `H^1(N)^G`.

use super::{tree_words, Cochain1};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::zmod::{self, add, QuotientModule};

/// `Hom(G, Z/m)` presented as a direct sum of cyclic groups.
///
/// Homomorphisms are determined by their values on the generators of the
/// group they live on; `basis[i]` has order `orders[i]`.
#[derive(Clone, Debug)]
pub struct H1 {
    group: FiniteGroup,
    m: u64,
    words: Vec<Vec<u64>>,
    module: QuotientModule,
    basis: Vec<Cochain1>,
}

impl H1 {
    fn from_constraints(group: &FiniteGroup, m: u64, rows: Vec<Vec<u64>>) -> H1 {
        let k = group.generators().len();
        let tree = group.spanning_tree();
        let words = tree_words(group, &tree, m);
        let kernel = zmod::kernel(rows, k, m);
        let module = QuotientModule::new(m, k, kernel, Vec::new());
        let basis = module
            .basis()
            .iter()
            .map(|v| values_from_gens(group, &words, m, v))
            .collect();
        H1 {
            group: group.clone(),
            m,
            words,
            module,
            basis,
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn basis(&self) -> &[Cochain1] {
        &self.basis
    }

    pub fn orders(&self) -> &[u64] {
        self.module.orders()
    }

    pub fn order(&self) -> u128 {
        self.module.order()
    }

    /// `sum coords_i basis_i`.
    pub fn combine(&self, coords: &[u64]) -> Cochain1 {
        let v = self.module.combine(coords);
        values_from_gens(&self.group, &self.words, self.m, &v)
    }

    /// Coordinates of a homomorphism in the basis; `None` if `f` is not one.
    pub fn coords(&self, f: &Cochain1) -> Option<Vec<u64>> {
        if f.group() != &self.group || f.modulus() != self.m {
            return None;
        }
        let v: Vec<u64> = self.group.generators().iter().map(|&s| f.at(s)).collect();
        let coords = self.module.decompose(&v)?;
        (self.combine(&coords) == *f).then_some(coords)
    }

    /// Every element, in lexicographic order of coordinates (first coordinate fastest).
    pub fn elements(&self) -> Vec<Cochain1> {
        all_coords(self.orders()).iter().map(|c| self.combine(c)).collect()
    }
}

/// All coordinate vectors of a product of cyclic groups, first coordinate fastest.
pub fn all_coords(orders: &[u64]) -> Vec<Vec<u64>> {
    let total: u64 = orders.iter().product();
    (0..total)
        .map(|mut t| {
            orders
                .iter()
                .map(|&o| {
                    let c = t % o;
                    t /= o;
                    c
                })
                .collect()
        })
        .collect()
}

fn values_from_gens(g: &FiniteGroup, words: &[Vec<u64>], m: u64, v: &[u64]) -> Cochain1 {
    let values = words
        .iter()
        .map(|w| w.iter().zip(v).fold(0, |acc, (&a, &b)| add(acc, zmod::mul(a, b, m), m)))
        .collect();
    Cochain1::new(g, m, values).expect("values of a homomorphism are normalized")
}

/// Rows `w_y + e_j - w_{y g_j}` for the edges of the Cayley graph outside the tree.
fn hom_constraints(g: &FiniteGroup, words: &[Vec<u64>], m: u64) -> Vec<Vec<u64>> {
    let tree = g.spanning_tree();
    let mut rows = Vec::new();
    for y in g.elements() {
        for (j, &s) in g.generators().iter().enumerate() {
            let z = g.mul(y, s);
            if tree.parent[z as usize] == Some((y, j)) {
                continue;
            }
            let mut row = words[y as usize].clone();
            row[j] = add(row[j], 1 % m, m);
            for (r, &w) in row.iter_mut().zip(&words[z as usize]) {
                *r = zmod::sub(*r, w, m);
            }
            if !zmod::is_zero(&row) {
                rows.push(row);
            }
        }
    }
    rows.sort();
    rows.dedup();
    rows
}

/// `H^1(G, Z/m)`.
pub fn h1(g: &FiniteGroup, m: u64) -> H1 {
    let words = tree_words(g, &g.spanning_tree(), m);
    H1::from_constraints(g, m, hom_constraints(g, &words, m))
}

/// `H^1(N, Z/m)^G`: homomorphisms on `N` constant on `G`-conjugacy.
///
/// The result lives on `N`'s local group (see [`Subgroup::as_group`]).
pub fn invariants_h1(n: &Subgroup, m: u64) -> Result<H1> {
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    let g = n.parent();
    let (local, emb) = n.as_group();
    let words = tree_words(local, &local.spanning_tree(), m);
    let mut rows = hom_constraints(local, &words, m);
    for &s in g.generators() {
        for (j, &nj) in local.generators().iter().enumerate() {
            let c = g.conj(emb[nj as usize], s);
            let l = n.local_index(c).expect("normal subgroup is conjugation-closed");
            let mut row = words[l as usize].clone();
            row[j] = zmod::sub(row[j], 1 % m, m);
            if !zmod::is_zero(&row) {
                rows.push(row);
            }
        }
    }
    rows.sort();
    rows.dedup();
    Ok(H1::from_constraints(local, m, rows))
}

/// Kernel of a character of `N`'s local group, as a subgroup of the parent.
pub fn kernel_in_parent(phi: &Cochain1, n: &Subgroup) -> Subgroup {
    let (_, emb) = n.as_group();
    let members: Vec<_> = emb
        .iter()
        .enumerate()
        .filter(|&(i, _)| phi.at(i as u32) == 0)
        .map(|(_, &x)| x)
        .collect();
    Subgroup::new(n.parent(), &members).expect("kernel of a character is a subgroup")
}
