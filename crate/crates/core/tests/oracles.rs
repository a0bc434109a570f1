//! Library results against brute-force computations that only use the
//! multiplication table.

use descent3::cohomology::h2;
use descent3::descent::{delta, embedding_solutions, hoechsmann_check};
use descent3::extensions::omega;
use descent3::group::{homs, make_group, quotient, Elem, FiniteGroup};
use descent3::series::q_central_series;

fn grp(s: &str) -> FiniteGroup {
    make_group(s).unwrap()
}

fn close(g: &FiniteGroup, seed: &[Elem]) -> Vec<bool> {
    let mut mem = vec![false; g.order()];
    mem[0] = true;
    let mut list = vec![0];
    for &s in seed {
        if !mem[s as usize] {
            mem[s as usize] = true;
            list.push(s);
        }
    }
    let mut i = 0;
    while i < list.len() {
        let a = list[i];
        for j in 0..list.len() {
            for x in [g.mul(a, list[j]), g.mul(list[j], a)] {
                if !mem[x as usize] {
                    mem[x as usize] = true;
                    list.push(x);
                }
            }
        }
        i += 1;
    }
    mem
}

fn members(mem: &[bool]) -> Vec<Elem> {
    (0..mem.len() as Elem).filter(|&x| mem[x as usize]).collect()
}

fn normal_closure(g: &FiniteGroup, seed: &[Elem]) -> Vec<bool> {
    let conj: Vec<Elem> = seed
        .iter()
        .flat_map(|&s| g.elements().map(move |x| (x, s)))
        .map(|(x, s)| g.mul(g.mul(g.inv(x), s), x))
        .collect();
    close(g, &conj)
}

fn all_normal(g: &FiniteGroup) -> Vec<Vec<bool>> {
    let mut found = vec![normal_closure(g, &[])];
    let mut i = 0;
    while i < found.len() {
        for x in g.elements() {
            let mut seed = members(&found[i]);
            seed.push(x);
            let n = normal_closure(g, &seed);
            if !found.contains(&n) {
                found.push(n);
            }
        }
        i += 1;
    }
    found
}

fn order_mod(g: &FiniteGroup, n: &[bool], x: Elem) -> u64 {
    let mut k = 1;
    let mut y = x;
    while !n[y as usize] {
        y = g.mul(y, x);
        k += 1;
    }
    k
}

/// Whether `G/N` is one of `1, Z/p, (Z/p)^2, Z/p^2` or `D4` / `M_{p^3}`.
fn in_full_list(g: &FiniteGroup, n: &[bool], p: u64) -> bool {
    let size = n.iter().filter(|&&b| b).count();
    let idx = (g.order() / size) as u64;
    let exp = g.elements().map(|x| order_mod(g, n, x)).max().unwrap();
    let abelian = g.elements().all(|x| g.elements().all(|y| n[g.commutator(x, y) as usize]));
    match idx {
        1 => true,
        i if i == p => true,
        i if i == p * p => exp == p || exp == p * p,
        i if i == p * p * p => {
            let involutions = g.elements().filter(|&x| order_mod(g, n, x) <= 2).count() / size;
            !abelian && exp == p * p && (p != 2 || involutions == 6)
        }
        _ => false,
    }
}

#[test]
fn delta_matches_brute_force() {
    let cases = [
        ("dihedral:8", 2),
        ("quaternion:8", 2),
        ("cyclic:8", 2),
        ("direct:cyclic:4,cyclic:2", 2),
        ("dihedral:16", 2),
        ("quaternion:16", 2),
        ("semidirect:8,2,3", 2),
        ("direct:dihedral:8,cyclic:2", 2),
        ("elementary:2:3", 2),
        ("modular:3", 3),
        ("heisenberg:3", 3),
        ("cyclic:27", 3),
        ("elementary:3:2", 3),
        ("semidirect:9,9,4", 3),
        ("direct:cyclic:9,cyclic:9", 3),
        ("dihedral:6", 2),
        ("dihedral:6", 3),
    ];
    for (s, p) in cases {
        let g = grp(s);
        let mut inter = vec![true; g.order()];
        for n in all_normal(&g).iter().filter(|n| in_full_list(&g, n, p)) {
            for (a, b) in inter.iter_mut().zip(n) {
                *a &= *b;
            }
        }
        assert_eq!(delta(&g, p).to_vec(), members(&inter), "{s} p={p}");
    }
}

#[test]
fn series_matches_brute_force() {
    for s in ["dihedral:16", "quaternion:8", "semidirect:9,9,4", "direct:heisenberg:3,cyclic:3", "cyclic:16", "dihedral:12"] {
        let g = grp(s);
        for q in [2u64, 3, 4, 9] {
            let series = q_central_series(&g, q);
            let mut term = vec![true; g.order()];
            for i in 1..=3 {
                assert_eq!(series.term(i).to_vec(), members(&term), "{s} q={q} i={i}");
                let t = members(&term);
                let mut seed: Vec<Elem> = t.iter().map(|&x| g.pow(x, q)).collect();
                seed.extend(t.iter().flat_map(|&x| g.elements().map(move |y| (x, y))).map(|(x, y)| g.commutator(x, y)));
                term = close(&g, &seed);
            }
        }
    }
}

/// All normalized 1-cochains that are homomorphisms into `Z/m`.
fn count_homs_to_cyclic(g: &FiniteGroup, m: u64) -> u64 {
    let n = g.order();
    let mut count = 0;
    let mut vals = vec![0u64; n];
    loop {
        if (0..n).all(|x| (0..n).all(|y| vals[g.mul(x as Elem, y as Elem) as usize] == (vals[x] + vals[y]) % m)) {
            count += 1;
        }
        if !next(&mut vals[1..], m) {
            return count;
        }
    }
}

fn next(v: &mut [u64], m: u64) -> bool {
    for x in v.iter_mut() {
        *x += 1;
        if *x < m {
            return true;
        }
        *x = 0;
    }
    false
}

/// `|Z^2| / |B^2|` over normalized cochains, by enumeration.
fn h2_order_brute(g: &FiniteGroup, m: u64) -> u64 {
    let n = g.order();
    let k = (n - 1) * (n - 1);
    let mut vals = vec![0u64; k];
    let at = |v: &[u64], x: usize, y: usize| if x == 0 || y == 0 { 0 } else { v[(x - 1) * (n - 1) + y - 1] };
    let mut cocycles = 0u64;
    loop {
        let ok = (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    let xy = g.mul(x as Elem, y as Elem) as usize;
                    let yz = g.mul(y as Elem, z as Elem) as usize;
                    (at(&vals, y, z) + at(&vals, x, yz)) % m == (at(&vals, xy, z) + at(&vals, x, y)) % m
                })
            })
        });
        cocycles += ok as u64;
        if !next(&mut vals, m) {
            break;
        }
    }
    let cochains1 = m.pow(n as u32 - 1);
    let coboundaries = cochains1 / count_homs_to_cyclic(g, m);
    cocycles / coboundaries
}

#[test]
fn h2_matches_brute_force() {
    for (s, m) in [
        ("cyclic:2", 2u64),
        ("cyclic:2", 4),
        ("cyclic:3", 3),
        ("cyclic:3", 9),
        ("cyclic:4", 2),
        ("cyclic:4", 4),
        ("cyclic:4", 6),
        ("elementary:2:2", 2),
        ("elementary:2:2", 4),
    ] {
        let g = grp(s);
        assert_eq!(h2(&g, m).unwrap().order(), h2_order_brute(&g, m) as u128, "{s} mod {m}");
    }
}

/// Homomorphisms `G -> B` by trying every image tuple for the generators.
fn brute_homs(g: &FiniteGroup, b: &FiniteGroup) -> Vec<Vec<Elem>> {
    let gens = g.generators().to_vec();
    // A word for each element: BFS over right multiplication by generators.
    let mut parent: Vec<Option<(Elem, usize)>> = vec![None; g.order()];
    let mut seen = vec![false; g.order()];
    seen[0] = true;
    let mut queue = vec![0];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for (j, &s) in gens.iter().enumerate() {
            let y = g.mul(x, s);
            if !seen[y as usize] {
                seen[y as usize] = true;
                parent[y as usize] = Some((x, j));
                queue.push(y);
            }
        }
        i += 1;
    }
    let mut out = Vec::new();
    let mut imgs = vec![0u64; gens.len()];
    loop {
        let mut f = vec![0 as Elem; g.order()];
        for &x in &queue[1..] {
            let (y, j) = parent[x as usize].unwrap();
            f[x as usize] = b.mul(f[y as usize], imgs[j] as Elem);
        }
        if g.elements().all(|x| g.elements().all(|y| f[g.mul(x, y) as usize] == b.mul(f[x as usize], f[y as usize]))) {
            out.push(f);
        }
        if !next(&mut imgs, b.order() as u64) {
            return out;
        }
    }
}

#[test]
fn embedding_counts_match_brute_force() {
    for (s, p) in [
        ("cyclic:4", 2u64),
        ("cyclic:8", 2),
        ("dihedral:8", 2),
        ("quaternion:8", 2),
        ("elementary:2:3", 2),
        ("direct:cyclic:4,cyclic:2", 2),
        ("cyclic:9", 3),
        ("modular:3", 3),
        ("heisenberg:3", 3),
    ] {
        let g = grp(s);
        let indices: &[usize] = if p == 2 { &[0, 1, 2, 3, 6] } else { &[0, 1, 2, 4, 5, 6] };
        for &i in indices {
            let w = omega(i, p).unwrap();
            let lifts = brute_homs(&g, w.middle());
            for proj in homs(&g, w.base(), true) {
                let expected = lifts
                    .iter()
                    .filter(|f| g.elements().all(|x| w.project().apply(f[x as usize]) == proj.apply(x)))
                    .count();
                let sols = embedding_solutions(&proj, &w).unwrap();
                assert_eq!(sols.len(), expected, "{s} omega{i}");
                // Solutions = |Hom(G/M, Z/p)| * matching characters.
                let (gbar, _) = quotient(&g, &proj.kernel()).unwrap();
                let h1 = count_homs_to_cyclic(&gbar, p) as usize;
                let r = hoechsmann_check(&proj, &w).unwrap();
                assert!(r.holds, "{s} omega{i}");
                assert_eq!(expected, h1 * r.matching_characters, "{s} omega{i}");
            }
        }
    }
}
