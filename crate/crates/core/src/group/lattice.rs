//! Subgroup lattices: normal subgroups, all subgroups, and normal subgroups of
//! p-power index.

use std::collections::HashSet;

use super::{commutator_subgroup, power_subgroup, Elem, FiniteGroup, Subgroup};

/// Closes a family of "atoms" under joins. `join` must return the subgroup
/// generated by its inputs.
fn join_closure(g: &FiniteGroup, atoms: Vec<Subgroup>) -> Vec<Subgroup> {
    let mut seen: HashSet<Vec<Elem>> = HashSet::new();
    let mut found: Vec<(Subgroup, Vec<Elem>)> = Vec::new();
    let mut atom_gens: Vec<(Subgroup, Vec<Elem>)> = Vec::new();
    for a in atoms {
        if seen.insert(a.members().to_vec()) {
            let gens = a.small_generators();
            atom_gens.push((a.clone(), gens.clone()));
            found.push((a, gens));
        }
    }
    let trivial = Subgroup::trivial(g);
    if seen.insert(trivial.members().to_vec()) {
        found.push((trivial, Vec::new()));
    }
    let mut head = 0;
    while head < found.len() {
        let (a, a_gens) = found[head].clone();
        head += 1;
        for (b, b_gens) in &atom_gens {
            if b.is_subgroup_of(&a) {
                continue;
            }
            let mut gens = a_gens.clone();
            gens.extend_from_slice(b_gens);
            let c = Subgroup::generated(g, &gens);
            if seen.insert(c.members().to_vec()) {
                let c_gens = c.small_generators();
                found.push((c, c_gens));
            }
        }
    }
    let mut out: Vec<Subgroup> = found.into_iter().map(|(s, _)| s).collect();
    out.sort();
    out
}

/// All normal subgroups, sorted by `(order, members)`.
///
/// Every normal subgroup is a join of normal closures of single elements, so
/// closing those atoms under joins is complete.
pub fn normal_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut seen = HashSet::new();
    let mut atoms = Vec::new();
    let mut covered = vec![false; g.order()];
    for x in g.elements() {
        if covered[x as usize] {
            continue;
        }
        let n = Subgroup::normal_closure(g, &[x]);
        // Conjugates of x have the same normal closure.
        for y in g.elements() {
            covered[g.conj(x, y) as usize] = true;
        }
        if seen.insert(n.members().to_vec()) {
            atoms.push(n);
        }
    }
    join_closure(g, atoms)
}

/// All subgroups, sorted by `(order, members)`. Joins of cyclic subgroups.
pub fn all_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut seen = HashSet::new();
    let mut atoms = Vec::new();
    for x in g.elements() {
        let c = Subgroup::generated(g, &[x]);
        if seen.insert(c.members().to_vec()) {
            atoms.push(c);
        }
    }
    join_closure(g, atoms)
}

/// Normal subgroups of `p`-power index at most `max_index`, sorted.
///
/// Descends from `G`: the children of `N` are the index-`p` subgroups of `N`
/// containing `N^p [N, G]`. Those are normal in `G` because `N / N^p[N,G]`
/// is central, and every normal subgroup of `p`-power index is reached along
/// a chief series with factors of order `p`.
pub fn normal_subgroups_p_index(g: &FiniteGroup, p: u64, max_index: usize) -> Vec<Subgroup> {
    let mut seen: HashSet<Vec<Elem>> = HashSet::new();
    let whole = Subgroup::whole(g);
    seen.insert(whole.members().to_vec());
    let mut found = vec![whole];
    let mut head = 0;
    while head < found.len() {
        let n = found[head].clone();
        head += 1;
        if n.index() * p as usize > max_index {
            continue;
        }
        for child in maximal_central_p_children(g, &n, p) {
            if seen.insert(child.members().to_vec()) {
                found.push(child);
            }
        }
    }
    found.sort();
    found
}

/// Index-`p` subgroups of `n` containing `n^p [n, g]`.
pub fn maximal_central_p_children(g: &FiniteGroup, n: &Subgroup, p: u64) -> Vec<Subgroup> {
    let k = power_subgroup(n, p).join(&commutator_subgroup(n, g).expect("n lives in g"));
    // Basis of the F_p-space n/k.
    let mut basis: Vec<Elem> = Vec::new();
    let mut span = k.clone();
    let k_gens = k.small_generators();
    for &x in n.members() {
        if span.contains(x) {
            continue;
        }
        basis.push(x);
        let mut gens = k_gens.clone();
        gens.extend_from_slice(&basis);
        span = Subgroup::generated(g, &gens);
        if span.order() == n.order() {
            break;
        }
    }
    let r = basis.len();
    let mut out = Vec::new();
    // Functionals with leading coefficient 1 at position j.
    for j in 0..r {
        let free = r - j - 1;
        let count = (p as usize).pow(free as u32);
        for code in 0..count {
            let mut f = vec![0u64; r];
            f[j] = 1;
            let mut c = code;
            for fi in f.iter_mut().skip(j + 1) {
                *fi = (c % p as usize) as u64;
                c /= p as usize;
            }
            let mut gens = k_gens.clone();
            for i in 0..r {
                if i == j {
                    continue;
                }
                // b_i b_j^(-f_i) lies in the kernel of f.
                let t = g.pow(g.inv(basis[j]), f[i]);
                gens.push(g.mul(basis[i], t));
            }
            out.push(Subgroup::generated(g, &gens));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_group;

    fn g(s: &str) -> FiniteGroup {
        make_group(s).unwrap()
    }

    /// Normal subgroups as unions of conjugacy classes closed under products.
    fn normal_by_classes(g: &FiniteGroup) -> Vec<Vec<Elem>> {
        let mut classes: Vec<Vec<Elem>> = Vec::new();
        let mut done = vec![false; g.order()];
        for x in g.elements().skip(1) {
            if done[x as usize] {
                continue;
            }
            let mut cl: Vec<Elem> = g.elements().map(|y| g.conj(x, y)).collect();
            cl.sort_unstable();
            cl.dedup();
            for &c in &cl {
                done[c as usize] = true;
            }
            classes.push(cl);
        }
        let mut out = Vec::new();
        for mask in 0u64..(1 << classes.len()) {
            let mut members = vec![0];
            for (i, cl) in classes.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    members.extend_from_slice(cl);
                }
            }
            members.sort_unstable();
            if Subgroup::new(g, &members).is_ok() {
                out.push(members);
            }
        }
        out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        out
    }

    #[test]
    fn normal_subgroup_counts() {
        assert_eq!(normal_subgroups(&g("quaternion:8")).len(), 6);
        assert_eq!(normal_subgroups(&g("dihedral:8")).len(), 6);
        assert_eq!(normal_subgroups(&g("cyclic:5")).len(), 2);
        assert_eq!(normal_subgroups(&g("cyclic:1")).len(), 1);
    }

    #[test]
    fn normal_subgroups_match_class_oracle() {
        for s in ["dihedral:8", "quaternion:8", "elementary:2:3", "direct:cyclic:4,cyclic:4",
            "heisenberg:3", "modular:3", "dihedral:16", "quaternion:16", "semidirect:8,2,3",
            "semidirect:8,2,5", "direct:dihedral:8,cyclic:2", "direct:quaternion:8,cyclic:2",
            "dihedral:32", "dihedral:12", "semidirect:7,3,2"]
        {
            let grp = g(s);
            let got: Vec<Vec<Elem>> = normal_subgroups(&grp).iter().map(|n| n.to_vec()).collect();
            assert_eq!(got, normal_by_classes(&grp), "{s}");
        }
    }

    #[test]
    fn p_index_descent_matches_filtered_lattice() {
        for (s, p) in [("dihedral:8", 2), ("quaternion:16", 2), ("modular:3", 3), ("heisenberg:3", 3),
            ("direct:cyclic:9,cyclic:3", 3), ("dihedral:12", 2), ("dihedral:12", 3)]
        {
            let grp = g(s);
            for max_index in [1usize, 2, 4, 8, 27, 1000] {
                let expected: Vec<Subgroup> = normal_subgroups(&grp)
                    .into_iter()
                    .filter(|n| {
                        let mut i = n.index();
                        while i % p as usize == 0 {
                            i /= p as usize;
                        }
                        i == 1 && n.index() <= max_index
                    })
                    .collect();
                assert_eq!(normal_subgroups_p_index(&grp, p, max_index), expected, "{s} {max_index}");
            }
        }
    }

    #[test]
    fn all_subgroups_of_small_groups() {
        // S3 has 6 subgroups, D4 has 10, Q8 has 6, (Z/2)^3 has 16.
        assert_eq!(all_subgroups(&g("dihedral:6")).len(), 6);
        assert_eq!(all_subgroups(&g("dihedral:8")).len(), 10);
        assert_eq!(all_subgroups(&g("quaternion:8")).len(), 6);
        assert_eq!(all_subgroups(&g("elementary:2:3")).len(), 16);
    }
}
