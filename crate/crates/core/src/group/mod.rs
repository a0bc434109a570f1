//! Finite groups as explicit Cayley tables.
//!
//! Elements are indices `0..order` with `0` the identity. Groups are cheap to
//! clone (shared immutable data) and every derived object keeps a handle to the
//! group it lives in.

mod homs;
mod lattice;
mod spec;

use std::collections::VecDeque;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

pub use homs::{
    abelian_invariants, common_kernel, fingerprint, hom_count_to_cyclic, homs, is_isomorphic, lifts_through,
    search_homs, Fingerprint, SearchOptions,
};
pub use lattice::{all_subgroups, maximal_central_p_children, normal_subgroups, normal_subgroups_p_index};
pub use spec::{default_order_cap, make_group, make_group_with_cap, GroupSpec};

/// Element index inside a [`FiniteGroup`].
pub type Elem = u32;

struct GroupData {
    order: usize,
    table: Vec<Elem>,
    inverse: Vec<Elem>,
    elem_orders: Vec<u32>,
    generators: Vec<Elem>,
    labels: Option<Vec<String>>,
    name: Option<String>,
}

/// A finite group given by its full multiplication table.
#[derive(Clone)]
pub struct FiniteGroup(Arc<GroupData>);

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order())
            .field("name", &self.0.name)
            .field("generators", &self.0.generators)
            .finish()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.order == other.0.order && self.0.table == other.0.table)
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Builds a group from a row-major table, checking every group axiom.
    ///
    /// Associativity is verified with Light's test against the generators,
    /// which is exact once the generators are known to generate.
    pub fn from_table(
        order: usize,
        table: Vec<Elem>,
        generators: Vec<Elem>,
        labels: Option<Vec<String>>,
        name: Option<String>,
    ) -> Result<FiniteGroup> {
        if order == 0 {
            return Err(Error::InvalidTable("order must be positive".into()));
        }
        if table.len() != order * order {
            return Err(Error::InvalidTable("table has the wrong size".into()));
        }
        if table.iter().any(|&x| x as usize >= order) {
            return Err(Error::InvalidTable("entry out of range".into()));
        }
        if generators.iter().any(|&g| g as usize >= order) {
            return Err(Error::InvalidTable("generator out of range".into()));
        }
        for x in 0..order {
            if table[x] as usize != x || table[x * order] as usize != x {
                return Err(Error::InvalidTable("0 is not a two-sided identity".into()));
            }
        }
        // Latin square property gives unique solvability, hence inverses.
        let mut seen = vec![0u32; order];
        for x in 0..order {
            let stamp = x as u32 + 1;
            for y in 0..order {
                let z = table[x * order + y] as usize;
                if seen[z] == stamp {
                    return Err(Error::InvalidTable(format!("row {x} repeats an entry")));
                }
                seen[z] = stamp;
            }
        }
        let mut inverse = vec![0; order];
        for x in 0..order {
            let y = (0..order)
                .find(|&y| table[x * order + y] == 0)
                .ok_or_else(|| Error::InvalidTable(format!("{x} has no right inverse")))?;
            if table[y * order + x] != 0 {
                return Err(Error::InvalidTable(format!("{x} has no two-sided inverse")));
            }
            inverse[x] = y as Elem;
        }
        let data = GroupData {
            order,
            table,
            inverse,
            elem_orders: Vec::new(),
            generators,
            labels,
            name,
        };
        let mut g = FiniteGroup(Arc::new(data));
        if g.closure(&g.0.generators.clone()).iter().filter(|&&b| b).count() != order {
            return Err(Error::InvalidTable("generators do not generate".into()));
        }
        for &a in &g.0.generators {
            for x in 0..order as Elem {
                let xa = g.mul(x, a);
                for y in 0..order as Elem {
                    if g.mul(x, g.mul(a, y)) != g.mul(xa, y) {
                        return Err(Error::InvalidTable("operation is not associative".into()));
                    }
                }
            }
        }
        let orders = (0..order as Elem).map(|x| g.compute_order(x)).collect();
        Arc::get_mut(&mut g.0).expect("fresh group is uniquely owned").elem_orders = orders;
        Ok(g)
    }

    /// Builds a group on `0..order` from a multiplication function.
    pub fn from_fn(
        order: usize,
        mul: impl Fn(usize, usize) -> usize,
        generators: Vec<Elem>,
        labels: Option<Vec<String>>,
        name: Option<String>,
    ) -> Result<FiniteGroup> {
        let mut table = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                table.push(mul(x, y) as Elem);
            }
        }
        FiniteGroup::from_table(order, table, generators, labels, name)
    }

    /// The trivial group.
    pub fn trivial() -> FiniteGroup {
        FiniteGroup::from_table(1, vec![0], Vec::new(), Some(vec!["1".into()]), Some("cyclic:1".into()))
            .expect("trivial group is valid")
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.0.table[a as usize * self.0.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.0.inverse[a as usize]
    }

    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        let o = self.element_order(a) as u64;
        let mut e = k % o;
        let mut base = a;
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `h^-1 g^-1 h g`.
    pub fn commutator(&self, h: Elem, g: Elem) -> Elem {
        let hg = self.mul(h, g);
        let gh = self.mul(g, h);
        self.mul(self.inv(gh), hg)
    }

    /// `g^-1 x g`.
    pub fn conj(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.inv(g), self.mul(x, g))
    }

    pub fn element_order(&self, a: Elem) -> u32 {
        self.0.elem_orders[a as usize]
    }

    fn compute_order(&self, a: Elem) -> u32 {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn generators(&self) -> &[Elem] {
        &self.0.generators
    }

    pub fn name(&self) -> Option<&str> {
        self.0.name.as_deref()
    }

    pub fn label(&self, x: Elem) -> String {
        match &self.0.labels {
            Some(l) => l[x as usize].clone(),
            None => format!("g{x}"),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.0.labels.as_deref()
    }

    pub fn table(&self) -> &[Elem] {
        &self.0.table
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.0.order as Elem
    }

    /// Copy of this group with a different display name.
    pub fn with_name(&self, name: impl Into<String>) -> FiniteGroup {
        let d = &self.0;
        FiniteGroup(Arc::new(GroupData {
            order: d.order,
            table: d.table.clone(),
            inverse: d.inverse.clone(),
            elem_orders: d.elem_orders.clone(),
            generators: d.generators.clone(),
            labels: d.labels.clone(),
            name: Some(name.into()),
        }))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Exponent: lcm of element orders.
    pub fn exponent(&self) -> u64 {
        self.0
            .elem_orders
            .iter()
            .fold(1u64, |acc, &o| acc / crate::zmod::gcd(acc, o as u64) * o as u64)
    }

    /// Membership mask of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[Elem]) -> Vec<bool> {
        let n = self.order();
        let mut mask = vec![false; n];
        mask[0] = true;
        let mut queue = VecDeque::from([0 as Elem]);
        let gens: Vec<Elem> = gens.iter().copied().filter(|&g| g != 0).collect();
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = self.mul(x, g);
                if !mask[y as usize] {
                    mask[y as usize] = true;
                    queue.push_back(y);
                }
            }
        }
        mask
    }

    /// Breadth-first spanning tree over the generators.
    ///
    /// Returns, for each element, its parent and the index of the generator
    /// used to reach it (`x = parent * gens[k]`), plus the visiting order.
    pub fn spanning_tree(&self) -> SpanningTree {
        let n = self.order();
        let gens = self.generators();
        let mut parent = vec![None; n];
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        seen[0] = true;
        order.push(0);
        let mut head = 0;
        while head < order.len() {
            let x = order[head];
            head += 1;
            for (k, &g) in gens.iter().enumerate() {
                let y = self.mul(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    parent[y as usize] = Some((x, k));
                    order.push(y);
                }
            }
        }
        SpanningTree { parent, order }
    }

    /// Checks every group axiom by full scan (test helper; cubic in the order).
    pub fn verify_axioms(&self) -> bool {
        let n = self.order() as Elem;
        for x in 0..n {
            if self.mul(0, x) != x || self.mul(x, 0) != x || self.mul(x, self.inv(x)) != 0 {
                return false;
            }
            for y in 0..n {
                let xy = self.mul(x, y);
                for z in 0..n {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return false;
                    }
                }
            }
        }
        self.closure(self.generators()).iter().all(|&b| b)
    }

    /// Direct product `self x other`, element `(a, b)` at index `a + |A| b`.
    pub fn direct_product(&self, other: &FiniteGroup, name: Option<String>) -> FiniteGroup {
        let na = self.order();
        let nb = other.order();
        let mut gens: Vec<Elem> = self.generators().to_vec();
        gens.extend(other.generators().iter().map(|&b| b * na as Elem));
        let labels = match (self.labels(), other.labels()) {
            (Some(la), Some(lb)) => Some(
                (0..na * nb)
                    .map(|i| format!("({},{})", la[i % na], lb[i / na]))
                    .collect(),
            ),
            _ => None,
        };
        FiniteGroup::from_fn(
            na * nb,
            |x, y| {
                let (a1, b1) = (x % na, x / na);
                let (a2, b2) = (y % na, y / na);
                self.mul(a1 as Elem, a2 as Elem) as usize
                    + na * other.mul(b1 as Elem, b2 as Elem) as usize
            },
            gens,
            labels,
            name,
        )
        .expect("direct product of groups is a group")
    }
}

/// Spanning tree of the Cayley graph with respect to the generators.
#[derive(Clone, Debug)]
pub struct SpanningTree {
    /// `parent[x] = Some((y, k))` means `x = y * gens[k]`; `None` for the identity.
    pub parent: Vec<Option<(Elem, usize)>>,
    /// Elements in breadth-first order, starting with the identity.
    pub order: Vec<Elem>,
}

/// A subgroup of a finite group, stored as its sorted member list.
#[derive(Clone)]
pub struct Subgroup {
    parent: FiniteGroup,
    members: Arc<Vec<Elem>>,
    mask: Arc<Vec<bool>>,
    local: Arc<OnceLock<(FiniteGroup, Vec<Elem>)>>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("order", &self.order())
            .field("members", &self.members)
            .finish()
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && self.parent == other.parent
    }
}

impl Eq for Subgroup {}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    /// Canonical order: by size, then lexicographically by member list.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.members.len(), &*self.members).cmp(&(other.members.len(), &*other.members))
    }
}

impl Subgroup {
    /// Wraps a membership mask that is already known to be a subgroup.
    pub(crate) fn from_mask_unchecked(parent: &FiniteGroup, mask: Vec<bool>) -> Subgroup {
        let members = mask
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i as Elem)
            .collect();
        Subgroup {
            parent: parent.clone(),
            members: Arc::new(members),
            mask: Arc::new(mask),
            local: Arc::new(OnceLock::new()),
        }
    }

    /// Checks closure and wraps the given member set.
    pub fn new(parent: &FiniteGroup, members: &[Elem]) -> Result<Subgroup> {
        let n = parent.order();
        let mut mask = vec![false; n];
        for &x in members {
            if x as usize >= n {
                return Err(Error::NotSubgroup(format!("element {x} out of range")));
            }
            mask[x as usize] = true;
        }
        if !mask[0] {
            return Err(Error::NotSubgroup("missing identity".into()));
        }
        for &x in members {
            if !mask[parent.inv(x) as usize] {
                return Err(Error::NotSubgroup("not closed under inverses".into()));
            }
            for &y in members {
                if !mask[parent.mul(x, y) as usize] {
                    return Err(Error::NotSubgroup("not closed under products".into()));
                }
            }
        }
        Ok(Subgroup::from_mask_unchecked(parent, mask))
    }

    /// Subgroup generated by the given elements.
    pub fn generated(parent: &FiniteGroup, gens: &[Elem]) -> Subgroup {
        Subgroup::from_mask_unchecked(parent, parent.closure(gens))
    }

    pub fn whole(parent: &FiniteGroup) -> Subgroup {
        Subgroup::from_mask_unchecked(parent, vec![true; parent.order()])
    }

    pub fn trivial(parent: &FiniteGroup) -> Subgroup {
        let mut mask = vec![false; parent.order()];
        mask[0] = true;
        Subgroup::from_mask_unchecked(parent, mask)
    }

    /// Smallest normal subgroup containing the given elements.
    pub fn normal_closure(parent: &FiniteGroup, elems: &[Elem]) -> Subgroup {
        let n = parent.order();
        let mut mask = vec![false; n];
        mask[0] = true;
        let mut members: Vec<Elem> = vec![0];
        let mut queue: VecDeque<Elem> = elems.iter().copied().collect();
        let gens = parent.generators().to_vec();
        // Closed under products and conjugation by generators (and hence by everything).
        while let Some(x) = queue.pop_front() {
            if mask[x as usize] {
                continue;
            }
            mask[x as usize] = true;
            members.push(x);
            for &g in &gens {
                queue.push_back(parent.conj(x, g));
            }
            let snapshot = members.clone();
            for &y in &snapshot {
                let xy = parent.mul(x, y);
                if !mask[xy as usize] {
                    queue.push_back(xy);
                }
                let yx = parent.mul(y, x);
                if !mask[yx as usize] {
                    queue.push_back(yx);
                }
            }
        }
        Subgroup::from_mask_unchecked(parent, mask)
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.mask[x as usize]
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.parent.order()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn is_normal(&self) -> bool {
        let g = &self.parent;
        g.generators()
            .iter()
            .all(|&s| self.members.iter().all(|&x| self.contains(g.conj(x, s))))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.parent;
        let gens = self.small_generators();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    pub fn is_central(&self) -> bool {
        let g = &self.parent;
        self.members
            .iter()
            .all(|&x| g.generators().iter().all(|&s| g.mul(x, s) == g.mul(s, x)))
    }

    /// A small generating set, chosen greedily by descending element order.
    pub fn small_generators(&self) -> Vec<Elem> {
        let g = &self.parent;
        let mut cand: Vec<Elem> = self.members.iter().copied().filter(|&x| x != 0).collect();
        cand.sort_by_key(|&x| (std::cmp::Reverse(g.element_order(x)), x));
        let mut gens = Vec::new();
        let mut mask = vec![false; g.order()];
        mask[0] = true;
        let mut count = 1;
        for x in cand {
            if count == self.order() {
                break;
            }
            if mask[x as usize] {
                continue;
            }
            gens.push(x);
            mask = g.closure(&gens);
            count = mask.iter().filter(|&&b| b).count();
        }
        gens
    }

    /// Local index of a member (position in the sorted member list).
    pub fn local_index(&self, x: Elem) -> Option<Elem> {
        self.members.binary_search(&x).ok().map(|i| i as Elem)
    }

    /// The subgroup as a standalone group on indices `0..order`, in member order.
    ///
    /// Returns the group and the embedding (local index -> parent element).
    pub fn as_group(&self) -> &(FiniteGroup, Vec<Elem>) {
        self.local.get_or_init(|| {
            let g = &self.parent;
            let k = self.order();
            let mut table = Vec::with_capacity(k * k);
            for &x in self.members.iter() {
                for &y in self.members.iter() {
                    table.push(self.local_index(g.mul(x, y)).expect("closed"));
                }
            }
            let gens = self
                .small_generators()
                .iter()
                .map(|&x| self.local_index(x).expect("member"))
                .collect();
            let labels = g
                .labels()
                .map(|l| self.members.iter().map(|&x| l[x as usize].clone()).collect());
            let grp = FiniteGroup::from_table(k, table, gens, labels, None)
                .expect("subgroup of a group is a group");
            (grp, self.members.to_vec())
        })
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let mask = self
            .mask
            .iter()
            .zip(other.mask.iter())
            .map(|(&a, &b)| a && b)
            .collect();
        Subgroup::from_mask_unchecked(&self.parent, mask)
    }

    /// Subgroup generated by both.
    pub fn join(&self, other: &Subgroup) -> Subgroup {
        let mut gens = self.small_generators();
        gens.extend(other.small_generators());
        Subgroup::generated(&self.parent, &gens)
    }

    /// Members as a JSON-friendly array.
    pub fn to_vec(&self) -> Vec<Elem> {
        self.members.to_vec()
    }
}

/// Center of `g`.
pub fn center(g: &FiniteGroup) -> Subgroup {
    let gens = g.generators();
    let mask = g
        .elements()
        .map(|z| gens.iter().all(|&s| g.mul(z, s) == g.mul(s, z)))
        .collect();
    Subgroup::from_mask_unchecked(g, mask)
}

/// `[H, G]`: the subgroup generated by all `[h, g]` with `h` in `H`, `g` in `G`.
pub fn commutator_subgroup(h: &Subgroup, g: &FiniteGroup) -> Result<Subgroup> {
    if h.parent() != g {
        return Err(Error::NotSubgroup("H does not live in G".into()));
    }
    let n = g.order();
    let mut mark = vec![false; n];
    let mut comms = Vec::new();
    for &x in h.members() {
        for y in g.elements() {
            let c = g.commutator(x, y);
            if !mark[c as usize] {
                mark[c as usize] = true;
                comms.push(c);
            }
        }
    }
    Ok(Subgroup::generated(g, &comms))
}

/// `H^q`: the subgroup generated by all `h^q` with `h` in `H`.
pub fn power_subgroup(h: &Subgroup, q: u64) -> Subgroup {
    let g = h.parent();
    let powers: Vec<Elem> = h.members().iter().map(|&x| g.pow(x, q)).collect();
    Subgroup::generated(g, &powers)
}

/// Derived subgroup `[G, G]`.
pub fn derived_subgroup(g: &FiniteGroup) -> Subgroup {
    commutator_subgroup(&Subgroup::whole(g), g).expect("same group")
}

/// A homomorphism between finite groups, stored as the full image table.
#[derive(Clone)]
pub struct GroupHom {
    domain: FiniteGroup,
    codomain: FiniteGroup,
    images: Arc<Vec<Elem>>,
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupHom").field("images", &self.images).finish()
    }
}

impl PartialEq for GroupHom {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images && self.domain == other.domain && self.codomain == other.codomain
    }
}

impl Eq for GroupHom {}

impl GroupHom {
    /// Wraps a full image table after checking the homomorphism law on all pairs.
    pub fn new(domain: &FiniteGroup, codomain: &FiniteGroup, images: Vec<Elem>) -> Result<GroupHom> {
        if images.len() != domain.order() || images.iter().any(|&y| y as usize >= codomain.order()) {
            return Err(Error::Shape("image table does not match the groups".into()));
        }
        for x in domain.elements() {
            for y in domain.elements() {
                if images[domain.mul(x, y) as usize]
                    != codomain.mul(images[x as usize], images[y as usize])
                {
                    return Err(Error::NotHomomorphism);
                }
            }
        }
        Ok(GroupHom::new_unchecked(domain, codomain, images))
    }

    pub(crate) fn new_unchecked(domain: &FiniteGroup, codomain: &FiniteGroup, images: Vec<Elem>) -> GroupHom {
        GroupHom {
            domain: domain.clone(),
            codomain: codomain.clone(),
            images: Arc::new(images),
        }
    }

    /// Extends images of the domain's generators to a homomorphism, if consistent.
    pub fn from_generator_images(
        domain: &FiniteGroup,
        codomain: &FiniteGroup,
        gen_images: &[Elem],
    ) -> Result<GroupHom> {
        if gen_images.len() != domain.generators().len() {
            return Err(Error::Shape("one image per generator required".into()));
        }
        extend_from_generators(domain, codomain, domain.generators(), gen_images)
            .map(|images| GroupHom::new_unchecked(domain, codomain, images))
            .ok_or(Error::NotHomomorphism)
    }

    pub fn identity(g: &FiniteGroup) -> GroupHom {
        GroupHom::new_unchecked(g, g, g.elements().collect())
    }

    pub fn trivial(domain: &FiniteGroup, codomain: &FiniteGroup) -> GroupHom {
        GroupHom::new_unchecked(domain, codomain, vec![0; domain.order()])
    }

    pub fn domain(&self) -> &FiniteGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteGroup {
        &self.codomain
    }

    pub fn images(&self) -> &[Elem] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.images[x as usize]
    }

    pub fn kernel(&self) -> Subgroup {
        let mask = self.images.iter().map(|&y| y == 0).collect();
        Subgroup::from_mask_unchecked(&self.domain, mask)
    }

    pub fn image(&self) -> Subgroup {
        let mut mask = vec![false; self.codomain.order()];
        for &y in self.images.iter() {
            mask[y as usize] = true;
        }
        Subgroup::from_mask_unchecked(&self.codomain, mask)
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().is_whole()
    }

    pub fn is_bijective(&self) -> bool {
        self.domain.order() == self.codomain.order() && self.is_injective()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GroupHom) -> Result<GroupHom> {
        if self.codomain != other.domain {
            return Err(Error::Shape("composition of incompatible maps".into()));
        }
        let images = self.images.iter().map(|&y| other.apply(y)).collect();
        Ok(GroupHom::new_unchecked(&self.domain, &other.codomain, images))
    }

    pub fn inverse(&self) -> Result<GroupHom> {
        if !self.is_bijective() {
            return Err(Error::NotBijective);
        }
        let mut inv = vec![0; self.codomain.order()];
        for x in self.domain.elements() {
            inv[self.apply(x) as usize] = x;
        }
        Ok(GroupHom::new_unchecked(&self.codomain, &self.domain, inv))
    }

    /// Restriction to a subgroup of the domain, as a map from the subgroup's local group.
    pub fn restrict(&self, h: &Subgroup) -> GroupHom {
        let (local, emb) = h.as_group();
        let images = emb.iter().map(|&x| self.apply(x)).collect();
        GroupHom::new_unchecked(local, &self.codomain, images)
    }
}

/// Extends generator images to the whole subgroup they generate; `None` if inconsistent.
///
/// The result has `0` at elements outside `<gens>`.
pub(crate) fn extend_from_generators(
    domain: &FiniteGroup,
    codomain: &FiniteGroup,
    gens: &[Elem],
    gen_images: &[Elem],
) -> Option<Vec<Elem>> {
    let n = domain.order();
    let mut images = vec![u32::MAX; n];
    images[0] = 0;
    let mut queue = VecDeque::from([0 as Elem]);
    while let Some(x) = queue.pop_front() {
        let fx = images[x as usize];
        for (k, &g) in gens.iter().enumerate() {
            let y = domain.mul(x, g);
            let fy = codomain.mul(fx, gen_images[k]);
            let slot = &mut images[y as usize];
            if *slot == u32::MAX {
                *slot = fy;
                queue.push_back(y);
            } else if *slot != fy {
                return None;
            }
        }
    }
    for v in images.iter_mut() {
        if *v == u32::MAX {
            *v = 0;
        }
    }
    Some(images)
}

/// Quotient `G/N` on coset representatives, with the projection.
///
/// Cosets are ordered by their least element, so the identity coset is `0`
/// and the representative of each coset is its least member.
pub fn quotient(g: &FiniteGroup, n: &Subgroup) -> Result<(FiniteGroup, GroupHom)> {
    if n.parent() != g {
        return Err(Error::NotSubgroup("N does not live in G".into()));
    }
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    let size = g.order();
    let mut coset = vec![u32::MAX; size];
    let mut reps: Vec<Elem> = Vec::new();
    for x in g.elements() {
        if coset[x as usize] != u32::MAX {
            continue;
        }
        let idx = reps.len() as u32;
        reps.push(x);
        for &m in n.members() {
            coset[g.mul(x, m) as usize] = idx;
        }
    }
    let k = reps.len();
    let mut table = Vec::with_capacity(k * k);
    for &a in &reps {
        for &b in &reps {
            table.push(coset[g.mul(a, b) as usize]);
        }
    }
    let mut gens: Vec<Elem> = Vec::new();
    for &s in g.generators() {
        let c = coset[s as usize];
        if c != 0 && !gens.contains(&c) {
            gens.push(c);
        }
    }
    let labels = g
        .labels()
        .map(|l| reps.iter().map(|&r| format!("{}N", l[r as usize])).collect());
    let q = FiniteGroup::from_table(k, table, gens, labels, None)?;
    let proj = GroupHom::new_unchecked(g, &q, coset);
    Ok((q, proj))
}

/// Canonical section of a projection: least element of each fiber.
pub fn least_section(proj: &GroupHom) -> Vec<Elem> {
    let mut s = vec![u32::MAX; proj.codomain().order()];
    for x in proj.domain().elements() {
        let y = proj.apply(x) as usize;
        if s[y] == u32::MAX {
            s[y] = x;
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group_is_valid() {
        let t = FiniteGroup::trivial();
        assert_eq!(t.order(), 1);
        assert!(t.verify_axioms());
        assert!(center(&t).is_whole());
    }

    #[test]
    fn rejects_non_associative_table() {
        // A Latin square with identity 0 that is not a group (order 5 loop).
        let t = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0,
        ];
        let err = FiniteGroup::from_table(5, t, vec![1, 2], None, None).unwrap_err();
        assert!(matches!(err, Error::InvalidTable(_)));
    }

    #[test]
    fn quotient_kernel_is_n() {
        let g = make_group("dihedral:8").unwrap();
        let z = center(&g);
        let (q, proj) = quotient(&g, &z).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(proj.kernel(), z);
        assert!(proj.is_surjective());
    }
}
