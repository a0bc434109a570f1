//! The catalog battery behind `verify-all` and the acceptance suite.
//!
//! Each check records whether it passed and whether passing was expected;
//! only a mismatch between the two counts as a failure of the battery.

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{catalog, CatalogEntry};
use crate::cohomology::{
    bockstein, cup, d1, h1, h2, invariants_h1, is_2cocycle, kernel_in_parent, sym_sk_decompose, Cochain1, Cochain2,
    ClassSpace,
};
use crate::descent::{
    distinguished_by_definition, distinguished_by_quotient, epi_lifting_check, grt_check, hoechsmann_check,
    list_intersection, maximal_p_quotient_order, reduced_list_intersection, verify_main_theorem, wgroup_properties,
    ListId,
};
use crate::error::Result;
use crate::extensions::{classify_middle, cyclic_group, omega, CentralExtension, SmallType};
use crate::group::{center, homs, make_group, quotient, Elem, FiniteGroup, GroupHom, Subgroup};
use crate::series::{next_term, q_central_series, w_quotient};
use crate::zmod::{self, Echelon};

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub primes: Vec<u64>,
    pub max_order: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            primes: vec![2, 3],
            max_order: 243,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub criterion: u8,
    pub name: String,
    pub passed: bool,
    /// The outcome the battery expects; `false` only for documented failures.
    pub expected: bool,
    pub detail: String,
}

impl Check {
    fn new(criterion: u8, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
        Check {
            criterion,
            name: name.into(),
            passed,
            expected: true,
            detail: detail.into(),
        }
    }

    pub fn unexpected(&self) -> bool {
        self.passed != self.expected
    }
}

pub const CRITERIA: [(u8, &str); 11] = [
    (1, "Baer sum of omega4 and omega6 is omega5"),
    (2, "extensions of cup, Bockstein and Lambda classes"),
    (3, "main theorem on the catalog"),
    (4, "counterexamples Q8, Z/3, H27"),
    (5, "distinguished subgroups: definition vs quotient list"),
    (6, "embedding problems vs transgression"),
    (7, "cohomology engine"),
    (8, "intersection of invariant character kernels"),
    (9, "reduced quotient lists"),
    (10, "local field model semidirect:9,9,4"),
    (11, "additional catalog checks"),
];

#[derive(Clone, Debug, Serialize)]
pub struct CriterionSummary {
    pub criterion: u8,
    pub title: String,
    pub checks: usize,
    pub passed: usize,
    pub unexpected: usize,
    pub verdict: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub primes: Vec<u64>,
    pub max_order: usize,
    pub criteria: Vec<CriterionSummary>,
    pub checks: Vec<Check>,
    pub verdict: String,
}

pub fn summarize(criterion: u8, checks: &[Check]) -> CriterionSummary {
    let title = CRITERIA.iter().find(|c| c.0 == criterion).map_or("", |c| c.1);
    let unexpected = checks.iter().filter(|c| c.unexpected()).count();
    CriterionSummary {
        criterion,
        title: title.into(),
        checks: checks.len(),
        passed: checks.iter().filter(|c| c.passed).count(),
        unexpected,
        verdict: if unexpected == 0 { "pass" } else { "fail" }.into(),
    }
}

pub fn run_criterion(n: u8, opts: &VerifyOptions) -> Result<Vec<Check>> {
    match n {
        1 => criterion_baer(opts),
        2 => criterion_classification(opts),
        3 => criterion_main_theorem(opts),
        4 => criterion_counterexamples(opts),
        5 => criterion_theorem11(opts),
        6 => criterion_hoechsmann(opts),
        7 => criterion_cohomology(opts),
        8 => criterion_pontryagin(opts),
        9 => criterion_lists(opts),
        10 => criterion_local_model(opts),
        11 => criterion_extras(opts),
        _ => Ok(Vec::new()),
    }
}

pub fn verify_all(opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut checks = Vec::new();
    let mut criteria = Vec::new();
    for (n, _) in CRITERIA {
        let c = run_criterion(n, opts)?;
        criteria.push(summarize(n, &c));
        checks.extend(c);
    }
    let ok = checks.iter().all(|c| !c.unexpected());
    Ok(VerifyReport {
        schema: 1,
        primes: opts.primes.clone(),
        max_order: opts.max_order,
        criteria,
        checks,
        verdict: if ok { "pass" } else { "fail" }.into(),
    })
}

fn entries(opts: &VerifyOptions) -> Vec<CatalogEntry> {
    catalog(&opts.primes, opts.max_order)
}

fn grp(s: &str) -> Result<FiniteGroup> {
    make_group(s)
}

fn par_entries<F>(opts: &VerifyOptions, f: F) -> Result<Vec<Check>>
where
    F: Fn(&CatalogEntry, &FiniteGroup) -> Result<Vec<Check>> + Sync,
{
    let per: Vec<Result<Vec<Check>>> = entries(opts).par_iter().map(|e| f(e, &grp(e.spec)?)).collect();
    let mut out = Vec::new();
    for r in per {
        out.extend(r?);
    }
    Ok(out)
}

// ---- 1 ----

fn criterion_baer(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    if !opts.primes.iter().any(|&p| p != 2) {
        return Ok(out);
    }
    for p in [3u64, 5] {
        if (p * p * p) as usize > opts.max_order {
            continue;
        }
        let sum = omega(4, p)?.baer_sum(&omega(6, p)?)?;
        let ok = sum.is_equivalent(&omega(5, p)?)?;
        out.push(Check::new(1, format!("baer omega4 + omega6 = omega5, p={p}"), ok, classify_middle(sum.middle()).to_string()));
    }
    Ok(out)
}

// ---- 2 ----

/// `theta: gbar -> base` sending `x` to `(psi(x), psi'(x))`, or `psi(x)` when the base is cyclic.
fn char_map(gbar: &FiniteGroup, base: &FiniteGroup, p: u64, chars: &[&Cochain1]) -> Result<GroupHom> {
    let images = gbar
        .elements()
        .map(|x| chars.iter().rev().fold(0u64, |acc, c| acc * p + c.at(x)) as Elem)
        .collect();
    GroupHom::new(gbar, base, images)
}

fn ext_of(c: &Cochain2) -> Result<CentralExtension> {
    CentralExtension::from_cocycle(c)
}

fn linearly_independent(a: &Cochain1, b: &Cochain1, p: u64) -> bool {
    !(a.is_zero() || b.is_zero() || (1..p).any(|k| a.scale(k) == *b))
}

fn criterion_classification(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let primes: Vec<u64> = [2u64, 3].into_iter().filter(|p| opts.primes.contains(p)).collect();
    let mut out = Vec::new();
    for p in primes {
        let w0 = omega(0, p)?;
        let w1 = omega(1, p)?;
        let w2 = omega(2, p)?;
        let w_plane = if p == 2 { omega(3, p)? } else { omega(4, p)? };
        let bases = [w0.base().clone(), w1.base().clone(), w_plane.base().clone()];
        for gbar in &bases {
            let chars = h1(gbar, p).elements();
            for a in &chars {
                for b in &chars {
                    let trivial_kernel = gbar.elements().skip(1).all(|x| a.at(x) != 0 || b.at(x) != 0);
                    if !trivial_kernel {
                        continue;
                    }
                    let tag = format!("p={p} |G|={} psi={:?} psi'={:?}", gbar.order(), a.values(), b.values());
                    // Cup products.
                    let (case, expected) = if a.is_zero() && b.is_zero() {
                        ("a", w0.twist(&GroupHom::trivial(gbar, w0.base()))?)
                    } else if b.is_zero() {
                        ("b", w1.twist(&char_map(gbar, w1.base(), p, &[a])?)?)
                    } else if a.is_zero() {
                        ("b", w1.twist(&char_map(gbar, w1.base(), p, &[b])?)?)
                    } else if !linearly_independent(a, b, p) {
                        if p == 2 {
                            ("c", w2.twist(&char_map(gbar, w2.base(), p, &[a])?)?)
                        } else {
                            ("d", w1.twist(&char_map(gbar, w1.base(), p, &[a])?)?)
                        }
                    } else {
                        let case = if p == 2 { "e" } else { "f" };
                        (case, w_plane.twist(&char_map(gbar, w_plane.base(), p, &[a, b])?)?)
                    };
                    let ext = ext_of(&cup(a, b)?)?;
                    out.push(Check::new(2, format!("cup case ({case}) {tag}"), ext.is_equivalent(&expected)?, ""));

                    if p != 2 && !a.is_zero() {
                        let lam = cup(a, b)?.add(&bockstein(a, p)?)?;
                        let ext = ext_of(&lam)?;
                        let (name, expected) = if linearly_independent(a, b, p) {
                            let w5 = omega(5, p)?;
                            ("omega5", w5.twist(&char_map(gbar, w5.base(), p, &[a, b])?)?)
                        } else {
                            ("omega2", w2.twist(&char_map(gbar, w2.base(), p, &[a])?)?)
                        };
                        out.push(Check::new(2, format!("Lambda gives {name} {tag}"), ext.is_equivalent(&expected)?, ""));
                    }
                }
            }
        }
        // Bockstein classes over Z/p.
        let zp = w1.base().clone();
        for a in h1(&zp, p).elements().into_iter().filter(|a| !a.is_zero()) {
            let ext = ext_of(&bockstein(&a, p)?)?;
            let expected = w2.twist(&char_map(&zp, w2.base(), p, &[&a])?)?;
            out.push(Check::new(
                2,
                format!("bockstein gives omega2, p={p} psi={:?}", a.values()),
                ext.is_equivalent(&expected)?,
                "",
            ));
        }
        // Converse recipes with theta = id.
        let pr = |g: &FiniteGroup, j: u32| -> Result<Cochain1> {
            Cochain1::new(g, p, g.elements().map(|x| (x as u64 / p.pow(j)) % p).collect())
        };
        let z = |g: &FiniteGroup| Cochain1::zero(g, p);
        let plane = w_plane.base().clone();
        let mut recipes: Vec<(usize, Cochain1, Cochain1)> = vec![
            (0, z(w0.base()), z(w0.base())),
            (1, if p == 2 { pr(&zp, 0)? } else { z(&zp) }, if p == 2 { z(&zp) } else { pr(&zp, 0)? }),
            (2, pr(&zp, 0)?, pr(&zp, 0)?),
        ];
        recipes.push((if p == 2 { 3 } else { 5 }, pr(&plane, 0)?, pr(&plane, 1)?));
        for (i, a, b) in recipes {
            let mut c = cup(&a, &b)?;
            if p != 2 {
                c = c.add(&bockstein(&a, p)?)?;
            }
            let target = omega(i, p)?;
            let ok = ext_of(&c)?.is_equivalent(&target)?;
            out.push(Check::new(2, format!("recipe for omega{i}, p={p}"), ok, ""));
        }
    }
    Ok(out)
}

// ---- 3 ----

/// Catalog groups where `G^(3) != Delta_G` (Galois relation type fails there).
pub const EXPECTED_COUNTEREXAMPLES: &[(&str, u64)] = &[
    ("quaternion:8", 2),
    ("direct:quaternion:8,cyclic:2", 2),
    ("heisenberg:3", 3),
    ("direct:heisenberg:3,cyclic:3", 3),
    ("direct:heisenberg:3,cyclic:9", 3),
];

fn criterion_main_theorem(opts: &VerifyOptions) -> Result<Vec<Check>> {
    par_entries(opts, |e, g| {
        let r = verify_main_theorem(g, e.p)?;
        let expected = if EXPECTED_COUNTEREXAMPLES.contains(&(e.spec, e.p)) { "fail-expected" } else { "pass" };
        let v = &r.verdicts;
        let detail = format!(
            "grt={:?} |G2|={} |G3|={} |Delta|={} outcome={}",
            v.grt_holds,
            r.g2.order(),
            r.g3.order(),
            r.delta_subgroup.order(),
            v.outcome
        );
        Ok(vec![
            Check::new(3, format!("sandwich {} p={}", e.spec, e.p), v.sandwich, detail.clone()),
            Check::new(3, format!("outcome {} p={}", e.spec, e.p), v.outcome == expected, detail),
        ])
    })
}

// ---- 4 ----

fn criterion_counterexamples(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    if opts.primes.contains(&2) {
        let q8 = grp("quaternion:8")?;
        let r = verify_main_theorem(&q8, 2)?;
        let z = center(&q8);
        out.push(Check::new(
            4,
            "Delta(Q8) = Z(Q8) of order 2, Q8^(3) = 1",
            r.delta_subgroup == z && z.order() == 2 && r.g3.is_trivial(),
            format!("|Delta|={} |G3|={}", r.delta_subgroup.order(), r.g3.order()),
        ));
        let no_big = distinguished_by_quotient(&q8, 2)
            .iter()
            .all(|d| !matches!(d.quotient, SmallType::Cyclic(4) | SmallType::D4));
        out.push(Check::new(4, "Q8 has no Z/4 or D4 quotient", no_big, ""));
        let g = grt_check(&q8, 2)?;
        out.push(Check::new(
            4,
            "Q8 fails condition (i)",
            !g.condition_i && g.condition_i_witness.is_some(),
            format!("witness {:?}", g.condition_i_witness),
        ));
    }
    if opts.primes.contains(&3) {
        for s in ["cyclic:3", "heisenberg:3"] {
            let g = grp(s)?;
            let n = reduced_list_intersection(&g, 3, ListId::OddReduced)?;
            let g3 = q_central_series(&g, 3).term(3).clone();
            out.push(Check::new(
                4,
                format!("{s}: reduced list intersection is G, G^(3) = 1"),
                n.is_whole() && g3.is_trivial(),
                format!("|N|={}", n.order()),
            ));
            let r = grt_check(&g, 3)?;
            out.push(Check::new(
                4,
                format!("{s} fails condition (ii)"),
                !r.condition_ii && r.xi.is_none(),
                format!("cup kernel order {}", r.cup_kernel_order),
            ));
        }
    }
    Ok(out)
}

// ---- 5 ----

pub const THEOREM11_GROUPS: &[(&str, u64)] = &[
    ("dihedral:8", 2),
    ("quaternion:8", 2),
    ("cyclic:8", 2),
    ("direct:cyclic:4,cyclic:2", 2),
    ("modular:3", 3),
    ("heisenberg:3", 3),
    ("cyclic:9", 3),
    ("elementary:3:2", 3),
    ("cyclic:27", 3),
];

fn definition_vs_quotient(criterion: u8, spec: &str, g: &FiniteGroup, p: u64) -> Result<Check> {
    let mut by_q: Vec<Vec<Elem>> = distinguished_by_quotient(g, p).iter().map(|d| d.subgroup.to_vec()).collect();
    let mut by_d: Vec<Vec<Elem>> = distinguished_by_definition(g, p)?.iter().map(Subgroup::to_vec).collect();
    by_q.sort();
    by_d.sort();
    Ok(Check::new(
        criterion,
        format!("definition = quotient list for {spec} p={p}"),
        by_q == by_d,
        format!("{} vs {} subgroups", by_d.len(), by_q.len()),
    ))
}

fn criterion_theorem11(opts: &VerifyOptions) -> Result<Vec<Check>> {
    THEOREM11_GROUPS
        .par_iter()
        .filter(|(_, p)| opts.primes.contains(p))
        .map(|&(s, p)| {
            let g = grp(s)?;
            if g.order() > opts.max_order {
                return Ok(None);
            }
            definition_vs_quotient(5, s, &g, p).map(Some)
        })
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().flatten().collect())
}

// ---- 6 ----

/// Name of the aggregate check for the literal solution-count equality.
pub const LITERAL_BIJECTION: &str = "solution count equals matching character count on every problem";

fn omega_indices(p: u64) -> Vec<usize> {
    if p == 2 {
        vec![0, 1, 2, 3, 6]
    } else {
        vec![0, 1, 2, 4, 5, 6]
    }
}

fn criterion_hoechsmann(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let limit = |p: u64| if p == 2 { 32 } else { 81 };
    let per = par_entries(opts, |e, g| {
        if g.order() > limit(e.p) {
            return Ok(Vec::new());
        }
        let mut solutions = 0usize;
        let mut characters = 0usize;
        let mut problems = 0usize;
        let mut corrected = true;
        let mut literal = true;
        // Solvable problems with H^1(G/M, A) != 0: each has fibers of size > 1.
        let mut predicted = true;
        let mut first_literal_failure = None;
        for i in omega_indices(e.p) {
            let w = omega(i, e.p)?;
            for proj in homs(g, w.base(), true) {
                let r = hoechsmann_check(&proj, &w)?;
                problems += 1;
                solutions += r.solutions;
                characters += r.matching_characters;
                corrected &= r.holds;
                predicted &= r.solutions == 0 || r.h1_base_order == 1;
                if !r.counts_equal && first_literal_failure.is_none() {
                    first_literal_failure = Some(format!(
                        "omega{i}: {} solutions, {} characters",
                        r.solutions, r.matching_characters
                    ));
                }
                literal &= r.counts_equal;
            }
        }
        let detail = format!("{problems} problems, {solutions} solutions, {characters} matching characters");
        let mut lit = Check::new(
            6,
            format!("literal count equality {} p={}", e.spec, e.p),
            literal,
            first_literal_failure.unwrap_or_default(),
        );
        lit.expected = predicted;
        Ok(vec![
            Check::new(6, format!("restriction onto trg-fiber, uniform fibers {} p={}", e.spec, e.p), corrected, detail),
            lit,
        ])
    })?;
    let literal: Vec<&Check> = per.iter().filter(|c| c.name.starts_with("literal")).collect();
    let all_literal = literal.iter().all(|c| c.passed);
    let predicted = literal.iter().all(|c| c.expected);
    if literal.is_empty() {
        return Ok(per);
    }
    let mut out = per;
    out.push(Check {
        criterion: 6,
        name: LITERAL_BIJECTION.into(),
        passed: all_literal,
        expected: predicted,
        detail: "fails whenever H^1(G/M, A) != 0 and the problem is solvable; each restriction fiber has |H^1(G/M, A)| solutions"
            .into(),
    });
    Ok(out)
}

// ---- 7 ----

fn power_of(base: &str, n: usize) -> Result<FiniteGroup> {
    let b = grp(base)?;
    let mut g = b.clone();
    for _ in 1..n {
        g = g.direct_product(&b, None);
    }
    Ok(g)
}

fn criterion_cohomology(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    // d o d = 0 on a few 1-cochains per group.
    for e in entries(opts).iter().filter(|e| e.order <= 32) {
        let g = grp(e.spec)?;
        for m in [2u64, 3, 4] {
            let ok = (1..4u64).all(|k| {
                let f = Cochain1::new(&g, m, g.elements().map(|x| (k * x as u64 * (x as u64 + 1)) % m).collect());
                f.map(|f| is_2cocycle(&d1(&f))).unwrap_or(false)
            });
            out.push(Check::new(7, format!("d(d f) = 0 on {} mod {m}", e.spec), ok, ""));
        }
    }
    for (n, m) in [(4u64, 2u64), (9, 6), (8, 12), (5, 5), (6, 4)] {
        let h = h2(&cyclic_group(n), m)?;
        let want = zmod::gcd(n, m) as u128;
        out.push(Check::new(7, format!("|H^2(Z/{n}, Z/{m})| = {want}"), h.order() == want, format!("got {}", h.order())));
    }
    for q in [2u64, 3, 4] {
        for n in 1..=3usize {
            let g = power_of(&format!("cyclic:{q}"), n)?;
            if g.order() > opts.max_order.max(64) {
                continue;
            }
            let tag = format!("(Z/{q})^{n}");
            let h = h2(&g, q)?;
            let d = sym_sk_decompose(&h)?;
            let basis = h1(&g, q).basis().to_vec();
            let mut cups = Vec::new();
            let mut span = Echelon::new(q, d.pairs.len().max(1));
            for a in &basis {
                for b in &basis {
                    let c = cup(a, b)?;
                    let mut v = d.psi(&c);
                    v.resize(d.pairs.len().max(1), 0);
                    span.insert(v);
                    cups.push(c);
                }
            }
            out.push(Check::new(
                7,
                format!("Psi(H^2_dec) = Skew for {tag}"),
                span.span_order() == d.skew_order,
                format!("{} of {}", span.span_order(), d.skew_order),
            ));
            let mut beta_classes: Vec<Vec<u64>> = h1(&g, q)
                .elements()
                .iter()
                .map(|f| h.class_of(&bockstein(f, q)?))
                .collect::<Result<_>>()?;
            beta_classes.sort();
            let injective = beta_classes.windows(2).all(|w| w[0] != w[1]);
            let mut sym = d.sym_classes.clone();
            sym.sort();
            out.push(Check::new(
                7,
                format!("beta maps H^1 isomorphically onto H^2_sym for {tag}"),
                injective && beta_classes == sym,
                format!("|H^1|={} |H^2_sym|={}", beta_classes.len(), sym.len()),
            ));
            let mut family = cups.clone();
            for a in &basis {
                family.push(bockstein(a, q)?);
            }
            let gen = ClassSpace::new(&g, q, &family).order();
            out.push(Check::new(
                7,
                format!("H^2 generated by cups and beta for {tag}"),
                gen == h.order(),
                format!("{gen} of {}", h.order()),
            ));
            if q == 2 {
                let dec = ClassSpace::new(&g, q, &cups).order();
                out.push(Check::new(7, format!("H^2 = H^2_dec for {tag}"), dec == h.order(), ""));
            }
        }
    }
    // beta(psi) = psi u psi at q = 2, every psi on every 2-group in the catalog.
    let two: Vec<CatalogEntry> = entries(opts).into_iter().filter(|e| e.p == 2 && e.order <= 64).collect();
    let checks: Vec<Result<Check>> = two
        .par_iter()
        .map(|e| {
            let g = grp(e.spec)?;
            let space = ClassSpace::new(&g, 2, &[]);
            let mut ok = true;
            for f in h1(&g, 2).elements() {
                ok &= space.same_class(&bockstein(&f, 2)?, &cup(&f, &f)?);
            }
            Ok(Check::new(7, format!("beta(psi) = psi u psi on {}", e.spec), ok, ""))
        })
        .collect();
    for c in checks {
        out.push(c?);
    }
    Ok(out)
}

// ---- 8 ----

fn criterion_pontryagin(opts: &VerifyOptions) -> Result<Vec<Check>> {
    par_entries(opts, |e, g| {
        let mut out = Vec::new();
        let normals = crate::group::normal_subgroups(g);
        for q in [2u64, 3, 4] {
            let mut ok = true;
            let mut bad = None;
            for n in &normals {
                let inv = invariants_h1(n, q)?;
                let k = inv
                    .basis()
                    .iter()
                    .fold(n.clone(), |acc, phi| acc.intersection(&kernel_in_parent(phi, n)));
                if k != next_term(n, q) {
                    ok = false;
                    bad.get_or_insert_with(|| n.to_vec());
                }
            }
            out.push(Check::new(
                8,
                format!("kernels of H^1(N)^G cut out N^q[N,G] on {} q={q}", e.spec),
                ok,
                format!("{} normal subgroups{}", normals.len(), bad.map(|b| format!(", first failure {b:?}")).unwrap_or_default()),
            ));
        }
        Ok(out)
    })
}

// ---- 9 ----

fn criterion_lists(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut out = par_entries(opts, |e, g| {
        let r = grt_check(g, e.p);
        if !matches!(r, Ok(ref r) if r.holds) {
            return Ok(Vec::new());
        }
        let g3 = q_central_series(g, e.p).term(3).clone();
        let mut lists = vec![if e.p == 2 { ListId::EvenReduced } else { ListId::OddReduced }];
        if e.p == 2 && maximal_p_quotient_order(g, 2) != 2 {
            lists.push(ListId::EvenShort);
        }
        lists
            .into_iter()
            .map(|l| {
                let n = reduced_list_intersection(g, e.p, l)?;
                Ok(Check::new(
                    9,
                    format!("{l} intersection = G^(3) on {} p={}", e.spec, e.p),
                    n == g3,
                    format!("|N|={} |G3|={}", n.order(), g3.order()),
                ))
            })
            .collect()
    })?;
    use SmallType::*;
    if opts.primes.contains(&2) {
        for s in ["dihedral:8", "dihedral:16", "dihedral:32"] {
            let g = grp(s)?;
            if g.order() > opts.max_order {
                continue;
            }
            let n0 = list_intersection(&g, 2, &[Trivial, Cyclic(2), Cyclic(4)]);
            let g3 = q_central_series(&g, 2).term(3).clone();
            let (q, _) = quotient(&g, &n0)?;
            let (w, _) = w_quotient(&g, 2)?;
            out.push(Check::new(
                9,
                format!("D4 cannot be dropped: {s}"),
                n0 != g3 && g3.is_subgroup_of(&n0) && !w.is_abelian() && classify_middle(&q) == Elementary(2, 2),
                format!("G/N0 = {}", classify_middle(&q)),
            ));
        }
        // Z/2 and Z/p^2 cannot be dropped either.
        let z2 = grp("cyclic:2")?;
        let n = list_intersection(&z2, 2, &[Trivial, Cyclic(4), D4]);
        out.push(Check::new(9, "Z/2 cannot be dropped: cyclic:2", !n.is_trivial(), ""));
        let z8 = grp("cyclic:8")?;
        let (w, _) = w_quotient(&z8, 2)?;
        let n = list_intersection(&z8, 2, &[Trivial, Cyclic(2), Elementary(2, 2), D4]);
        out.push(Check::new(
            9,
            "Z/4 cannot be dropped: cyclic:8",
            classify_middle(&w) == Cyclic(4) && n != *q_central_series(&z8, 2).term(3),
            "",
        ));
    }
    if opts.primes.contains(&3) {
        let z27 = grp("cyclic:27")?;
        let (w, _) = w_quotient(&z27, 3)?;
        let n = list_intersection(&z27, 3, &[Trivial, Cyclic(3), Elementary(3, 2), Modular(3)]);
        out.push(Check::new(
            9,
            "Z/9 cannot be dropped: cyclic:27",
            classify_middle(&w) == Cyclic(9) && n != *q_central_series(&z27, 3).term(3),
            "",
        ));
    }
    for &p in opts.primes.iter().filter(|&&p| p == 2 || p == 3) {
        let d = distinguished_by_quotient(&FiniteGroup::trivial(), p);
        out.push(Check::new(
            9,
            format!("trivial group: the only distinguished subgroup has quotient 1, p={p}"),
            d.len() == 1 && d[0].quotient == Trivial,
            "",
        ));
    }
    Ok(out)
}

// ---- 10 ----

fn criterion_local_model(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    if !opts.primes.contains(&3) || opts.max_order < 81 {
        return Ok(out);
    }
    let g = grp("semidirect:9,9,4")?;
    let m = grp("modular:3")?;
    let (tau, sigma) = (g.generators()[0], g.generators()[1]);
    let (r, s) = (m.generators()[0], m.generators()[1]);
    let direct = GroupHom::from_generator_images(&g, &m, &[r, s]).ok();
    let inverse = GroupHom::from_generator_images(&g, &m, &[r, m.inv(s)]).ok();
    let epi = direct.iter().chain(&inverse).any(GroupHom::is_surjective);
    out.push(Check::new(
        10,
        "M27 quotient via tau -> r, sigma -> s^(+-1)",
        epi && g.mul(g.mul(sigma, tau), g.inv(sigma)) == g.pow(tau, 4),
        format!(
            "sigma -> s is {}a homomorphism; sigma -> s^-1 is {}a homomorphism",
            if direct.is_some() { "" } else { "not " },
            if inverse.is_some() { "" } else { "not " }
        ),
    ));
    let n0 = list_intersection(&g, 3, &[SmallType::Trivial, SmallType::Cyclic(9)]);
    let (q, _) = quotient(&g, &n0)?;
    out.push(Check::new(
        10,
        "G/N0 = Z/9 x Z/3",
        classify_middle(&q) == SmallType::CyclicSquareByCyclic(3),
        classify_middle(&q).to_string(),
    ));
    let (w, proj) = w_quotient(&g, 3)?;
    out.push(Check::new(10, "G/G^(3) is G itself and nonabelian", proj.is_bijective() && !w.is_abelian(), ""));
    let wr = wgroup_properties(&g, 3)?;
    for pr in &wr.predicates {
        out.push(Check::new(10, format!("W-group: {}", pr.name), pr.applicable && pr.holds, pr.note.clone().unwrap_or_default()));
    }
    Ok(out)
}

// ---- 11 ----

fn criterion_extras(opts: &VerifyOptions) -> Result<Vec<Check>> {
    par_entries(opts, |e, g| {
        let mut out = Vec::new();
        let tag = format!("{} p={}", e.spec, e.p);
        let wr = wgroup_properties(g, e.p)?;
        out.push(Check::new(11, format!("W-group predicates {tag}"), wr.holds, ""));
        let el = epi_lifting_check(g, e.p)?;
        out.push(Check::new(
            11,
            format!("epimorphism lifting {tag}"),
            el.holds,
            format!("preconditions {}", el.preconditions_hold),
        ));
        let p3 = (e.p * e.p * e.p) as usize;
        let bounded = distinguished_by_quotient(g, e.p).iter().all(|d| {
            let (q, _) = quotient(g, &d.subgroup).expect("normal");
            p3 % d.subgroup.index() == 0 && (e.p * e.p) % q.exponent() == 0
        });
        out.push(Check::new(11, format!("distinguished index | p^3, exponent | p^2 {tag}"), bounded, ""));
        out.push(definition_vs_quotient(11, e.spec, g, e.p)?);
        for q in [e.p, e.p * e.p] {
            let s = q_central_series(g, q);
            let ok = s.terms.windows(2).all(|w| {
                invariants_h1(&w[0], q).map(|h| h.order() == (w[0].order() / w[1].order()) as u128).unwrap_or(false)
            });
            out.push(Check::new(11, format!("series factors dual to invariant characters {tag} q={q}"), ok, ""));
        }
        Ok(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cap_keeps_key_checks() {
        let opts = VerifyOptions {
            primes: vec![3],
            max_order: 27,
        };
        let c1 = run_criterion(1, &opts).unwrap();
        assert_eq!(c1.len(), 1);
        assert!(c1[0].passed);
        let c4 = run_criterion(4, &opts).unwrap();
        assert!(c4.iter().any(|c| c.name.contains("heisenberg")));
        assert!(c4.iter().all(|c| !c.unexpected()));
    }

    #[test]
    fn empty_catalog_passes() {
        let opts = VerifyOptions {
            primes: vec![],
            max_order: 243,
        };
        let r = verify_all(&opts).unwrap();
        assert_eq!(r.verdict, "pass");
    }
}
