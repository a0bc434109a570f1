//! Homomorphism enumeration, fingerprints and isomorphism testing.

use std::collections::{BTreeMap, VecDeque};

use super::{center, derived_subgroup, quotient, Elem, FiniteGroup, GroupHom, Subgroup};
use crate::zmod::gcd;

/// Extends generator images over `<gens>`; unreached elements stay `u32::MAX`.
fn extend_partial(
    domain: &FiniteGroup,
    codomain: &FiniteGroup,
    gens: &[Elem],
    imgs: &[Elem],
) -> Option<Vec<Elem>> {
    let mut images = vec![u32::MAX; domain.order()];
    images[0] = 0;
    let mut queue = VecDeque::from([0 as Elem]);
    while let Some(x) = queue.pop_front() {
        let fx = images[x as usize];
        for (&g, &a) in gens.iter().zip(imgs) {
            let y = domain.mul(x, g);
            let fy = codomain.mul(fx, a);
            let slot = &mut images[y as usize];
            if *slot == u32::MAX {
                *slot = fy;
                queue.push_back(y);
            } else if *slot != fy {
                return None;
            }
        }
    }
    Some(images)
}

fn injective_on_reached(images: &[Elem], codomain_order: usize) -> bool {
    let mut seen = vec![false; codomain_order];
    for &y in images {
        if y != u32::MAX {
            if seen[y as usize] {
                return false;
            }
            seen[y as usize] = true;
        }
    }
    true
}

/// Options for [`search_homs`].
#[derive(Clone, Copy, Debug, Default)]
pub struct SearchOptions {
    pub epi_only: bool,
    pub injective: bool,
    /// Stop after this many results.
    pub limit: Option<usize>,
}

/// Backtracking over generator images, each drawn from `candidates[i]`.
///
/// Every prefix is checked for consistency on the subgroup it generates, and
/// candidate images must have order dividing the generator's order. Results
/// come out in lexicographic order of the generator-image tuple.
pub fn search_homs(
    domain: &FiniteGroup,
    codomain: &FiniteGroup,
    candidates: &[Vec<Elem>],
    opts: SearchOptions,
) -> Vec<GroupHom> {
    let gens = domain.generators();
    assert_eq!(candidates.len(), gens.len(), "one candidate list per generator");
    let filtered: Vec<Vec<Elem>> = gens
        .iter()
        .zip(candidates)
        .map(|(&g, cands)| {
            let o = domain.element_order(g);
            let mut c: Vec<Elem> = cands
                .iter()
                .copied()
                .filter(|&y| o % codomain.element_order(y) == 0)
                .filter(|&y| !opts.injective || codomain.element_order(y) == o)
                .collect();
            c.sort_unstable();
            c.dedup();
            c
        })
        .collect();
    let mut out = Vec::new();
    let mut imgs: Vec<Elem> = Vec::with_capacity(gens.len());
    backtrack(domain, codomain, &filtered, opts, &mut imgs, &mut out);
    out
}

fn backtrack(
    domain: &FiniteGroup,
    codomain: &FiniteGroup,
    cands: &[Vec<Elem>],
    opts: SearchOptions,
    imgs: &mut Vec<Elem>,
    out: &mut Vec<GroupHom>,
) -> bool {
    let gens = domain.generators();
    let i = imgs.len();
    if i == gens.len() {
        let Some(images) = extend_partial(domain, codomain, gens, imgs) else {
            return false;
        };
        if opts.epi_only && !codomain.closure(imgs).iter().all(|&b| b) {
            return false;
        }
        out.push(GroupHom::new_unchecked(domain, codomain, images));
        return opts.limit.is_some_and(|l| out.len() >= l);
    }
    for &y in &cands[i] {
        imgs.push(y);
        let ok = match extend_partial(domain, codomain, &gens[..=i], imgs) {
            Some(partial) => !opts.injective || injective_on_reached(&partial, codomain.order()),
            None => false,
        };
        if ok && backtrack(domain, codomain, cands, opts, imgs, out) {
            imgs.pop();
            return true;
        }
        imgs.pop();
    }
    false
}

/// All homomorphisms `g -> h` (or only the surjective ones), in deterministic order.
pub fn homs(g: &FiniteGroup, h: &FiniteGroup, epi_only: bool) -> Vec<GroupHom> {
    if epi_only && h.order() > g.order() {
        return Vec::new();
    }
    let all: Vec<Elem> = h.elements().collect();
    let cands = vec![all; g.generators().len()];
    search_homs(
        g,
        h,
        &cands,
        SearchOptions {
            epi_only,
            ..Default::default()
        },
    )
}

/// Whether `a` and `b` are isomorphic, returning an isomorphism `a -> b` if so.
pub fn is_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> Option<GroupHom> {
    if fingerprint(a) != fingerprint(b) {
        return None;
    }
    let all: Vec<Elem> = b.elements().collect();
    let cands = vec![all; a.generators().len()];
    search_homs(
        a,
        b,
        &cands,
        SearchOptions {
            epi_only: true,
            injective: true,
            limit: Some(1),
        },
    )
    .pop()
}

/// Some homomorphism `g -> target` with `proj ∘ hom = base_map`, if one exists.
///
/// `proj: target -> base` and `base_map: g -> base`; candidate images are
/// restricted to the matching fibers of `proj`.
pub fn lifts_through(base_map: &GroupHom, proj: &GroupHom, epi_only: bool, limit: Option<usize>) -> Vec<GroupHom> {
    let g = base_map.domain();
    let target = proj.domain();
    let mut fibers: Vec<Vec<Elem>> = vec![Vec::new(); proj.codomain().order()];
    for y in target.elements() {
        fibers[proj.apply(y) as usize].push(y);
    }
    let cands: Vec<Vec<Elem>> = g
        .generators()
        .iter()
        .map(|&s| fibers[base_map.apply(s) as usize].clone())
        .collect();
    search_homs(
        g,
        target,
        &cands,
        SearchOptions {
            epi_only,
            injective: false,
            limit,
        },
    )
}

/// Isomorphism invariants used to prefilter isomorphism tests.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub order: usize,
    /// `(element order, count)` pairs, ascending.
    pub element_orders: Vec<(u32, usize)>,
    pub center_order: usize,
    pub derived_order: usize,
    /// Elementary divisors of the abelianization, ascending.
    pub abelianization: Vec<u64>,
    pub exponent: u64,
}

pub fn fingerprint(g: &FiniteGroup) -> Fingerprint {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for x in g.elements() {
        *counts.entry(g.element_order(x)).or_default() += 1;
    }
    let derived = derived_subgroup(g);
    let (ab, _) = quotient(g, &derived).expect("derived subgroup is normal");
    Fingerprint {
        order: g.order(),
        element_orders: counts.into_iter().collect(),
        center_order: center(g).order(),
        derived_order: derived.order(),
        abelianization: abelian_invariants(&ab),
        exponent: g.exponent(),
    }
}

/// Elementary divisors (prime powers, ascending) of an abelian group.
///
/// For each prime `p` the number of cyclic factors of order at least `p^k`
/// is `log_p |A[p^k]| - log_p |A[p^(k-1)]|`.
pub fn abelian_invariants(a: &FiniteGroup) -> Vec<u64> {
    debug_assert!(a.is_abelian());
    let n = a.order() as u64;
    let mut primes = Vec::new();
    let mut rest = n;
    let mut d = 2;
    while d * d <= rest {
        if rest % d == 0 {
            primes.push(d);
            while rest % d == 0 {
                rest /= d;
            }
        }
        d += 1;
    }
    if rest > 1 {
        primes.push(rest);
    }
    let mut out = Vec::new();
    for p in primes {
        let log_count = |pk: u64| -> u32 {
            let c = a
                .elements()
                .filter(|&x| pk % a.element_order(x) as u64 == 0)
                .count() as u64;
            let mut l = 0;
            let mut c = c;
            while c > 1 {
                c /= p;
                l += 1;
            }
            l
        };
        let mut logs = vec![0u32];
        let mut pk = 1u64;
        loop {
            pk *= p;
            let l = log_count(pk);
            if l == *logs.last().unwrap() {
                break;
            }
            logs.push(l);
        }
        // at_least[k] = number of cyclic factors of order >= p^k.
        let at_least: Vec<u32> = (1..logs.len()).map(|k| logs[k] - logs[k - 1]).collect();
        for k in 1..=at_least.len() {
            let exact = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
            for _ in 0..exact {
                out.push(p.pow(k as u32));
            }
        }
    }
    out.sort_unstable();
    out
}

/// `|Hom(G, Z/m)|` from the abelianization: the product of `gcd(d_i, m)`.
pub fn hom_count_to_cyclic(g: &FiniteGroup, m: u64) -> u64 {
    let (ab, _) = quotient(g, &derived_subgroup(g)).expect("derived subgroup is normal");
    abelian_invariants(&ab).iter().map(|&d| gcd(d, m)).product()
}

/// Kernel intersection of a family of homomorphisms out of `g`.
pub fn common_kernel(g: &FiniteGroup, maps: &[GroupHom]) -> Subgroup {
    let mask = g.elements().map(|x| maps.iter().all(|f| f.apply(x) == 0)).collect();
    Subgroup::from_mask_unchecked(g, mask)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_group;

    fn g(s: &str) -> FiniteGroup {
        make_group(s).unwrap()
    }

    #[test]
    fn homs_small_counts() {
        let z4 = g("cyclic:4");
        let z2 = g("cyclic:2");
        assert_eq!(homs(&z4, &z2, false).len(), 2);
        assert_eq!(homs(&z4, &z2, true).len(), 1);
        let e = g("elementary:3:2");
        assert_eq!(homs(&e, &g("cyclic:3"), false).len(), 9);
        let t = g("cyclic:1");
        assert_eq!(homs(&t, &z4, false).len(), 1);
        assert_eq!(homs(&z4, &t, true).len(), 1);
    }

    #[test]
    fn semidirect_maps_onto_modular() {
        let src = g("semidirect:9,9,4");
        let m = g("modular:3");
        let epis = homs(&src, &m, true);
        assert!(!epis.is_empty());
        for f in &epis {
            assert!(GroupHom::new(&src, &m, f.images().to_vec()).is_ok());
        }
    }

    #[test]
    fn isomorphism_examples() {
        assert!(is_isomorphic(&g("dihedral:8"), &g("quaternion:8")).is_none());
        let d = g("dihedral:8");
        let iso = is_isomorphic(&d, &d).unwrap();
        assert!(iso.is_bijective());
        let f = is_isomorphic(&g("semidirect:4,2,3"), &d).unwrap();
        assert!(GroupHom::new(f.domain(), f.codomain(), f.images().to_vec()).is_ok());
        assert!(f.is_bijective());
        assert!(is_isomorphic(&g("heisenberg:3"), &g("modular:3")).is_none());
        assert!(is_isomorphic(&g("modular:2"), &g("dihedral:8")).is_some());
    }

    #[test]
    fn invariants_of_abelian_groups() {
        assert_eq!(abelian_invariants(&g("cyclic:12")), vec![3, 4]);
        assert_eq!(abelian_invariants(&g("direct:cyclic:9,cyclic:3")), vec![3, 9]);
        assert_eq!(abelian_invariants(&g("elementary:2:3")), vec![2, 2, 2]);
        assert!(abelian_invariants(&g("cyclic:1")).is_empty());
    }

    #[test]
    fn fingerprints_separate_order_eight() {
        let specs = ["cyclic:8", "direct:cyclic:4,cyclic:2", "elementary:2:3", "dihedral:8", "quaternion:8"];
        let fps: Vec<_> = specs.iter().map(|s| fingerprint(&g(s))).collect();
        for i in 0..fps.len() {
            for j in 0..i {
                assert_ne!(fps[i], fps[j]);
            }
        }
    }
}
