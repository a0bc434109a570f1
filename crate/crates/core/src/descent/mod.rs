//! `Omega(G)`, the map `Lambda_G`, simple-type elements, and the Galois
//! relation type predicate.
//!
//! Elements of `Omega(G)` are kept in coordinates relative to a fixed basis
//! `e_1..e_r` of `H^1(G, Z/q)`: the tensor part is an `r x r` matrix `T` with
//! `sum T_ij e_i (x) e_j`, and the `H^1` part is a coordinate vector.

mod distinguished;
mod embedding;
mod wgroup;

pub use distinguished::{
    delta, distinguished_by_definition, distinguished_by_quotient, list_intersection, maximal_p_quotient_order,
    reduced_list_intersection, verify_main_theorem, Distinguished, ListId, MainTheoremReport,
};
pub use embedding::{embedding_solutions, epi_lifting_check, hoechsmann_check, EpiLift, EpiLiftReport, HoechsmannReport};
pub use wgroup::{wgroup_properties, Predicate, WGroupReport};

use serde::Serialize;

use crate::cohomology::h1::all_coords;
use crate::cohomology::{bockstein, cup, h1, Cochain1, Cochain2, ClassSpace, H1};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::zmod::{self, Echelon, Expresser};

/// Upper bound on enumerated pairs `(psi, psi')` in the condition (i) check.
pub const PAIR_ENUMERATION_CAP: u128 = 1 << 24;

/// An element of `Omega(G)` in basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaElement {
    pub q: u64,
    pub rank: usize,
    /// Row-major `rank x rank`.
    pub tensor: Vec<u64>,
    /// Empty when `q = 2`.
    pub h1: Vec<u64>,
}

impl OmegaElement {
    pub fn is_zero(&self) -> bool {
        zmod::is_zero(&self.tensor) && zmod::is_zero(&self.h1)
    }

    pub fn add(&self, other: &OmegaElement) -> OmegaElement {
        let q = self.q;
        let z = |a: &[u64], b: &[u64]| a.iter().zip(b).map(|(&x, &y)| zmod::add(x, y, q)).collect();
        OmegaElement {
            tensor: z(&self.tensor, &other.tensor),
            h1: z(&self.h1, &other.h1),
            ..self.clone()
        }
    }

    pub fn neg(&self) -> OmegaElement {
        let q = self.q;
        OmegaElement {
            tensor: self.tensor.iter().map(|&x| zmod::neg(x, q)).collect(),
            h1: self.h1.iter().map(|&x| zmod::neg(x, q)).collect(),
            ..self.clone()
        }
    }

    /// Coefficients against the family `[e_i u e_j]* ++ [beta(e_i)]*`.
    fn family_coeffs(&self) -> Vec<u64> {
        let mut a = self.tensor.clone();
        if self.h1.is_empty() {
            a.resize(self.rank * self.rank + self.rank, 0);
        } else {
            a.extend_from_slice(&self.h1);
        }
        a
    }

    /// `(psi, psi')` with `self = psi (x) psi'` (q = 2) or `(psi (x) psi', psi)`.
    pub fn simple_factors(&self) -> Option<(Vec<u64>, Vec<u64>)> {
        let (q, r) = (self.q, self.rank);
        let row = |i: usize| &self.tensor[i * r..(i + 1) * r];
        let outer = |a: &[u64], b: &[u64]| -> Vec<u64> {
            a.iter().flat_map(|&x| b.iter().map(move |&y| zmod::mul(x, y, q))).collect()
        };
        if !self.h1.is_empty() {
            let psi = self.h1.clone();
            let Some(i) = psi.iter().position(|&c| c != 0) else {
                return zmod::is_zero(&self.tensor).then(|| (vec![0; r], vec![0; r]));
            };
            let inv = zmod::inv_mod(psi[i], q)?;
            let psi2: Vec<u64> = row(i).iter().map(|&t| zmod::mul(t, inv, q)).collect();
            return (outer(&psi, &psi2) == self.tensor).then_some((psi, psi2));
        }
        let Some(i) = (0..r).find(|&i| !zmod::is_zero(row(i))) else {
            return Some((vec![0; r], vec![0; r]));
        };
        let psi2 = row(i).to_vec();
        let j = psi2.iter().position(|&c| c != 0).expect("nonzero row");
        let inv = zmod::inv_mod(psi2[j], q)?;
        let psi: Vec<u64> = (0..r).map(|k| zmod::mul(row(k)[j], inv, q)).collect();
        (outer(&psi, &psi2) == self.tensor).then_some((psi, psi2))
    }

    pub fn is_simple_type(&self) -> bool {
        self.simple_factors().is_some()
    }
}

/// `Omega(G)` for a fixed `q`, with the cocycles needed to evaluate `Lambda`.
#[derive(Clone, Debug)]
pub struct Omega {
    group: FiniteGroup,
    q: u64,
    h1: H1,
    cups: Vec<Cochain2>,
    bocks: Vec<Cochain2>,
    space: ClassSpace,
    cup_space: ClassSpace,
}

impl Omega {
    /// Requires `H^1(G, Z/q)` to be free over `Z/q` (automatic for prime `q`).
    pub fn new(g: &FiniteGroup, q: u64) -> Result<Omega> {
        if q < 2 {
            return Err(Error::Precondition("q must be at least 2".into()));
        }
        let h1 = h1(g, q);
        if h1.orders().iter().any(|&o| o != q) {
            return Err(Error::Unsupported(format!("H^1(G, Z/{q}) is not free over Z/{q}")));
        }
        let basis = h1.basis();
        let mut cups = Vec::with_capacity(basis.len() * basis.len());
        for a in basis {
            for b in basis {
                cups.push(cup(a, b)?);
            }
        }
        let bocks = basis.iter().map(|e| bockstein(e, q)).collect::<Result<Vec<_>>>()?;
        let mut family = cups.clone();
        family.extend(bocks.iter().cloned());
        let space = ClassSpace::new(g, q, &family);
        let cup_space = ClassSpace::new(g, q, &cups);
        Ok(Omega {
            group: g.clone(),
            q,
            h1,
            cups,
            bocks,
            space,
            cup_space,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn rank(&self) -> usize {
        self.h1.basis().len()
    }

    pub fn h1(&self) -> &H1 {
        &self.h1
    }

    /// The span of the cup and Bockstein classes inside `H^2(G, Z/q)`.
    pub fn class_space(&self) -> &ClassSpace {
        &self.space
    }

    fn has_h1_part(&self) -> bool {
        self.q != 2
    }

    pub fn zero(&self) -> OmegaElement {
        let r = self.rank();
        OmegaElement {
            q: self.q,
            rank: r,
            tensor: vec![0; r * r],
            h1: if self.has_h1_part() { vec![0; r] } else { Vec::new() },
        }
    }

    /// `psi (x) psi'` for `q = 2`, `(psi (x) psi', psi)` otherwise.
    pub fn simple(&self, psi: &[u64], psi2: &[u64]) -> OmegaElement {
        let q = self.q;
        let mut a = self.zero();
        for (i, &x) in psi.iter().enumerate() {
            for (j, &y) in psi2.iter().enumerate() {
                a.tensor[i * a.rank + j] = zmod::mul(x, y, q);
            }
        }
        if self.has_h1_part() {
            a.h1 = psi.iter().map(|&x| x % q).collect();
        }
        a
    }

    /// `psi (x) psi'` with zero `H^1` part.
    pub fn tensor(&self, psi: &[u64], psi2: &[u64]) -> OmegaElement {
        let mut a = self.simple(psi, psi2);
        a.h1.iter_mut().for_each(|x| *x = 0);
        a
    }

    pub fn character(&self, coords: &[u64]) -> Cochain1 {
        self.h1.combine(coords)
    }

    fn check(&self, a: &OmegaElement) -> Result<()> {
        if a.q != self.q {
            return Err(Error::ModulusMismatch(a.q as u32, self.q as u32));
        }
        let h = if self.has_h1_part() { self.rank() } else { 0 };
        if a.rank != self.rank() || a.tensor.len() != a.rank * a.rank || a.h1.len() != h {
            return Err(Error::Shape("Omega element does not match the group".into()));
        }
        Ok(())
    }

    /// A cocycle representing `Lambda(a) = sum T_ij e_i u e_j + beta(h)`.
    pub fn lambda_cocycle(&self, a: &OmegaElement) -> Result<Cochain2> {
        self.check(a)?;
        let coeffs = a.family_coeffs();
        let terms: Vec<(u64, &Cochain2)> = coeffs
            .iter()
            .zip(self.cups.iter().chain(&self.bocks))
            .filter(|(&c, _)| c != 0)
            .map(|(&c, z)| (c, z))
            .collect();
        Ok(Cochain2::combination(&self.group, self.q, &terms))
    }

    /// Coordinates of `Lambda(a)` in the cyclic decomposition of [`Omega::class_space`].
    pub fn lambda_eval(&self, a: &OmegaElement) -> Result<Vec<u64>> {
        self.check(a)?;
        Ok(self.space.coords_of_combination(&a.family_coeffs()))
    }

    pub fn lambda_is_zero(&self, a: &OmegaElement) -> Result<bool> {
        Ok(zmod::is_zero(&self.lambda_eval(a)?))
    }

    /// Coordinates of `beta(psi)` in [`Omega::class_space`].
    pub fn bockstein_class(&self, psi: &[u64]) -> Vec<u64> {
        let r = self.rank();
        let mut a = vec![0; r * r];
        a.extend(psi.iter().map(|&x| x % self.q));
        self.space.coords_of_combination(&a)
    }

    /// Whether `psi u xi + beta(psi) = 0` for every `psi`.
    pub fn is_witness(&self, xi: &[u64]) -> bool {
        let r = self.rank();
        (0..r).all(|i| {
            let mut e = vec![0; r];
            e[i] = 1;
            let mut a = self.tensor(&e, xi).family_coeffs();
            a[r * r + i] = 1;
            zmod::is_zero(&self.space.coords_of_combination(&a))
        })
    }

    /// Generators of `ker(u : H^1 (x) H^1 -> H^2)` as tensor matrices.
    pub fn cup_kernel(&self) -> &[Vec<u64>] {
        self.cup_space.relations()
    }
}

/// Outcome of the Galois relation type check.
#[derive(Clone, Debug, Serialize)]
pub struct GrtReport {
    pub group_spec: Option<String>,
    pub q: u64,
    pub h1_rank: usize,
    pub cup_kernel_order: u128,
    pub simple_span_order: u128,
    pub condition_i: bool,
    /// Tensor matrix of a cup-kernel element outside the simple-tensor span.
    pub condition_i_witness: Option<Vec<u64>>,
    pub condition_ii: bool,
    /// Coordinates of the least `xi`.
    pub xi: Option<Vec<u64>>,
    pub xi_values: Option<Vec<u64>>,
    pub condition_iii: bool,
    pub condition_iii_note: String,
    pub holds: bool,
}

/// The check together with the data needed by [`Grt::decompose_kernel_element`].
#[derive(Clone, Debug)]
pub struct Grt {
    pub omega: Omega,
    pub report: GrtReport,
    /// Simple tensors `psi (x) psi'` in the cup kernel whose span is the
    /// span of all such tensors.
    pub simple_basis: Vec<(Vec<u64>, Vec<u64>)>,
}

pub fn grt_check(g: &FiniteGroup, q: u64) -> Result<GrtReport> {
    Ok(grt_analyze(g, q)?.report)
}

pub fn grt_analyze(g: &FiniteGroup, q: u64) -> Result<Grt> {
    let omega = Omega::new(g, q)?;
    let r = omega.rank();
    let orders = vec![q; r];
    let pairs = (q as u128).pow(2 * r as u32);
    if pairs > PAIR_ENUMERATION_CAP {
        return Err(Error::WorkCap {
            what: "pairs of characters",
            work: pairs.min(usize::MAX as u128) as usize,
            cap: PAIR_ENUMERATION_CAP as usize,
        });
    }

    // (i)
    let mut kernel = Echelon::new(q, r * r);
    for v in omega.cup_kernel() {
        kernel.insert(v.clone());
    }
    let chars = all_coords(&orders);
    let mut simple = Echelon::new(q, r * r);
    let mut simple_basis = Vec::new();
    'outer: for a in &chars {
        for b in &chars {
            if simple.span_order() == kernel.span_order() {
                break 'outer;
            }
            let t = omega.tensor(a, b);
            if !zmod::is_zero(&omega.cup_space.coords_of_combination(&t.tensor)) {
                continue;
            }
            if simple.insert(t.tensor.clone()) {
                simple_basis.push((a.clone(), b.clone()));
            }
        }
    }
    let condition_i = simple.span_order() == kernel.span_order();
    let condition_i_witness = (!condition_i)
        .then(|| omega.cup_kernel().iter().find(|v| !simple.contains(v)).cloned())
        .flatten();

    // (ii)
    let xi = chars.iter().find(|xi| omega.is_witness(xi)).cloned();
    let xi_values = xi.as_ref().map(|c| omega.character(c).values().to_vec());

    // (iii)
    let (condition_iii, condition_iii_note) = condition_iii(g, q, r)?;

    let condition_ii = xi.is_some();
    let report = GrtReport {
        group_spec: g.name().map(str::to_string),
        q,
        h1_rank: r,
        cup_kernel_order: kernel.span_order(),
        simple_span_order: simple.span_order(),
        condition_i,
        condition_i_witness,
        condition_ii,
        xi,
        xi_values,
        condition_iii,
        condition_iii_note,
        holds: condition_i && condition_ii && condition_iii,
    };
    Ok(Grt {
        omega,
        report,
        simple_basis,
    })
}

/// Surjectivity of `H^1(G, Z/q) -> H^1(G, Z/p^i)`, given `H^1(G, Z/q)` free of rank `r`.
fn condition_iii(g: &FiniteGroup, q: u64, r: usize) -> Result<(bool, String)> {
    let (p, d) = prime_power(q).ok_or_else(|| Error::Precondition(format!("{q} is not a prime power")))?;
    if d == 1 {
        return Ok((true, "q is prime".into()));
    }
    let mut pi = 1u64;
    for _ in 1..d {
        pi *= p;
        // The reduction map is surjective iff every character mod p^i lifts,
        // and the image has order p^(i r) because the source is free.
        let target = h1(g, pi).order();
        if target != (pi as u128).pow(r as u32) {
            return Ok((false, format!("H^1(G, Z/{pi}) has order {target}, more than the image")));
        }
    }
    Ok((true, format!("reductions onto H^1(G, Z/p^i) are onto for i < {d}")))
}

fn prime_power(n: u64) -> Option<(u64, u32)> {
    let p = (2..=n).find(|d| n % d == 0)?;
    let mut k = 0;
    let mut r = n;
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

impl Grt {
    /// Splits `a` in `ker Lambda` into elements of simple type in `ker Lambda`.
    ///
    /// For `q != 2` the summands are `(psi0 (x) xi, psi0)`, then for each
    /// cup-kernel simple tensor `psi_i (x) psi'_i` of the remainder the pair
    /// `(psi_i (x) (psi'_i + xi), psi_i)` and `-(psi_i (x) xi, psi_i)`.
    /// Zero summands are dropped.
    pub fn decompose_kernel_element(&self, a: &OmegaElement, xi: &[u64]) -> Result<Vec<OmegaElement>> {
        let om = &self.omega;
        let q = om.q;
        if !om.lambda_is_zero(a)? {
            return Err(Error::Precondition("element is not in the kernel of Lambda".into()));
        }
        if a.is_zero() {
            return Ok(Vec::new());
        }
        let gens: Vec<Vec<u64>> = self.simple_basis.iter().map(|(x, y)| om.tensor(x, y).tensor).collect();
        let expresser = Expresser::new(q, om.rank() * om.rank(), &gens);
        let split = |t: &[u64]| -> Result<Vec<(Vec<u64>, Vec<u64>)>> {
            let c = expresser
                .express(t)
                .ok_or_else(|| Error::Precondition("kernel element outside the simple-tensor span".into()))?;
            Ok(c.iter()
                .zip(&self.simple_basis)
                .filter(|(&c, _)| c != 0)
                .map(|(&c, (x, y))| (zmod::scale(x, c, q), y.clone()))
                .collect())
        };
        if q == 2 {
            return Ok(split(&a.tensor)?.iter().map(|(x, y)| om.simple(x, y)).collect());
        }
        if !om.is_witness(xi) {
            return Err(Error::Precondition("xi is not a witness for condition (ii)".into()));
        }
        let psi0 = a.h1.clone();
        let first = om.simple(&psi0, xi);
        let rest = a.add(&first.neg());
        debug_assert!(zmod::is_zero(&rest.h1));
        let mut out = Vec::new();
        if !first.is_zero() {
            out.push(first);
        }
        for (x, y) in split(&rest.tensor)? {
            let shifted: Vec<u64> = y.iter().zip(xi).map(|(&u, &v)| zmod::add(u, v, q)).collect();
            for s in [om.simple(&x, &shifted), om.simple(&zmod::scale(&x, q - 1, q), xi)] {
                if !s.is_zero() {
                    out.push(s);
                }
            }
        }
        Ok(out)
    }
}
