//! Subgroup lattices, normal subgroups, chief series and quotients.
//!
//! The lattice works on a Cayley table of the parent group: every subgroup is
//! a bitset over the parent's canonically ordered elements.

use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::{conjugacy_classes, generate, Group};
use crate::perm::Perm;

/// Default bound on `|G|` for full subgroup enumeration.
pub const DEFAULT_LATTICE_LIMIT: u64 = 400;

/// Multiplication table of a group over its sorted element list.
pub(crate) struct ElementTable {
    elements: Vec<Perm>,
    product: Vec<u32>,
    inverse: Vec<u32>,
    identity: u32,
}

impl ElementTable {
    fn new(g: &Group) -> Result<Self> {
        let elements = g.elements()?.to_vec();
        let n = elements.len();
        let index = |p: &Perm| elements.binary_search(p).expect("closed under products") as u32;
        let mut product = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                product.push(index(&a.mul(b)));
            }
        }
        let inverse = elements.iter().map(|a| index(&a.inverse())).collect();
        let identity = index(&g.identity());
        Ok(ElementTable {
            elements,
            product,
            inverse,
            identity,
        })
    }

    pub(crate) fn len(&self) -> usize {
        self.elements.len()
    }

    #[inline]
    pub(crate) fn mul(&self, a: u32, b: u32) -> u32 {
        self.product[a as usize * self.elements.len() + b as usize]
    }

    pub(crate) fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    pub(crate) fn perm(&self, a: u32) -> &Perm {
        &self.elements[a as usize]
    }

    pub(crate) fn index_of(&self, p: &Perm) -> Option<u32> {
        self.elements.binary_search(p).ok().map(|i| i as u32)
    }

    /// Subgroup generated by the given elements.
    pub(crate) fn closure(&self, gens: &[u32]) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.len());
        let mut list = vec![self.identity];
        set.insert(self.identity as usize);
        let mut k = 0;
        while k < list.len() {
            let x = list[k];
            for &g in gens {
                let y = self.mul(x, g);
                if !set.put(y as usize) {
                    list.push(y);
                }
            }
            k += 1;
        }
        set
    }

    fn conjugate_set(&self, set: &FixedBitSet, t: u32) -> FixedBitSet {
        let ti = self.inv(t);
        let mut out = FixedBitSet::with_capacity(self.len());
        for x in set.ones() {
            out.insert(self.mul(ti, self.mul(x as u32, t)) as usize);
        }
        out
    }
}

/// All subgroups of a group, canonically ordered by `(order, element list)`,
/// with conjugacy classes and normality flags.
pub struct SubgroupLattice {
    parent: Group,
    table: ElementTable,
    members: Vec<FixedBitSet>,
    generators: Vec<Vec<u32>>,
    subgroups: Vec<Group>,
    normal: Vec<bool>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    lookup: HashMap<FixedBitSet, usize>,
}

impl SubgroupLattice {
    /// Enumerates every subgroup of `g`, refusing groups above the default
    /// lattice threshold.
    pub fn enumerate(g: &Group) -> Result<Self> {
        Self::enumerate_within(g, DEFAULT_LATTICE_LIMIT)
    }

    pub fn enumerate_within(g: &Group, limit: u64) -> Result<Self> {
        if g.order() > limit {
            return Err(Error::LatticeThreshold {
                order: g.order(),
                limit,
            });
        }
        let table = ElementTable::new(g)?;
        let n = table.len();

        let mut found: HashMap<FixedBitSet, usize> = HashMap::new();
        let mut raw: Vec<(FixedBitSet, Vec<u32>)> = Vec::new();
        let mut cyclic: Vec<u32> = Vec::new();
        for x in 0..n as u32 {
            let gens = if x == table.identity { vec![] } else { vec![x] };
            let set = table.closure(&gens);
            if !found.contains_key(&set) {
                found.insert(set.clone(), raw.len());
                if !gens.is_empty() {
                    cyclic.push(x);
                }
                raw.push((set, gens));
            }
        }

        // Extend every subgroup by every cyclic subgroup until nothing new
        // appears; each subgroup is reached from a smaller generating set.
        let mut frontier: Vec<usize> = (0..raw.len()).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for s in frontier {
                for &c in &cyclic {
                    if raw[s].0.contains(c as usize) {
                        continue;
                    }
                    let mut gens = raw[s].1.clone();
                    gens.push(c);
                    let set = table.closure(&gens);
                    if !found.contains_key(&set) {
                        found.insert(set.clone(), raw.len());
                        next.push(raw.len());
                        raw.push((set, gens));
                    }
                }
            }
            frontier = next;
        }

        let mut keyed: Vec<(usize, Vec<usize>, FixedBitSet, Vec<u32>)> = raw
            .into_iter()
            .map(|(set, gens)| (set.count_ones(..), set.ones().collect(), set, gens))
            .collect();
        keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));

        let degree = g.degree();
        let mut members = Vec::with_capacity(keyed.len());
        let mut generators = Vec::with_capacity(keyed.len());
        let mut subgroups = Vec::with_capacity(keyed.len());
        let mut lookup = HashMap::with_capacity(keyed.len());
        for (i, (_, idx, set, gens)) in keyed.into_iter().enumerate() {
            let perms: Vec<Perm> = idx.iter().map(|&k| table.perm(k as u32).clone()).collect();
            let gen_perms = gens.iter().map(|&k| table.perm(k).clone()).collect();
            subgroups.push(Group::with_elements(degree, gen_perms, perms));
            lookup.insert(set.clone(), i);
            members.push(set);
            generators.push(gens);
        }

        let parent_gens: Vec<u32> = g
            .generators()
            .iter()
            .map(|p| table.index_of(p).expect("generator in group"))
            .collect();
        let count = members.len();
        let mut class_of = vec![usize::MAX; count];
        let mut classes = Vec::new();
        for i in 0..count {
            if class_of[i] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class = vec![i];
            class_of[i] = id;
            let mut k = 0;
            while k < class.len() {
                for &t in &parent_gens {
                    let image = table.conjugate_set(&members[class[k]], t);
                    let j = lookup[&image];
                    if class_of[j] == usize::MAX {
                        class_of[j] = id;
                        class.push(j);
                    }
                }
                k += 1;
            }
            class.sort_unstable();
            classes.push(class);
        }
        let normal = (0..count)
            .map(|i| classes[class_of[i]].len() == 1)
            .collect();

        Ok(SubgroupLattice {
            parent: g.clone(),
            table,
            members,
            generators,
            subgroups,
            normal,
            class_of,
            classes,
            lookup,
        })
    }

    pub fn parent(&self) -> &Group {
        &self.parent
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Group] {
        &self.subgroups
    }

    pub fn subgroup(&self, i: usize) -> &Group {
        &self.subgroups[i]
    }

    pub fn order(&self, i: usize) -> u64 {
        self.subgroups[i].order()
    }

    /// Index of the trivial subgroup (always 0).
    pub fn trivial_index(&self) -> usize {
        0
    }

    /// Index of the parent group (always last).
    pub fn top_index(&self) -> usize {
        self.len() - 1
    }

    pub fn is_normal(&self, i: usize) -> bool {
        self.normal[i]
    }

    pub fn normal_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.normal[i]).collect()
    }

    /// Conjugacy classes of subgroups as sorted index lists, ordered by their
    /// first member.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    /// All conjugates of subgroup `i` (including itself).
    pub fn conjugates(&self, i: usize) -> &[usize] {
        &self.classes[self.class_of[i]]
    }

    pub fn class_representatives(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    /// Whether subgroup `j` is contained in subgroup `i`.
    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.members[j].is_subset(&self.members[i])
    }

    pub fn intersection_order(&self, i: usize, j: usize) -> u64 {
        self.members[i].intersection_count(&self.members[j]) as u64
    }

    pub fn intersection(&self, i: usize, j: usize) -> usize {
        let mut set = self.members[i].clone();
        set.intersect_with(&self.members[j]);
        self.lookup[&set]
    }

    /// Index of `<H_i, H_j>`.
    pub fn join(&self, i: usize, j: usize) -> usize {
        if self.contains(i, j) {
            return i;
        }
        if self.contains(j, i) {
            return j;
        }
        let mut gens = self.generators[i].clone();
        gens.extend_from_slice(&self.generators[j]);
        self.lookup[&self.table.closure(&gens)]
    }

    /// Index of the largest normal subgroup of the parent inside `H_i`.
    pub fn core(&self, i: usize) -> usize {
        let mut set = self.members[i].clone();
        for &j in self.conjugates(i) {
            set.intersect_with(&self.members[j]);
        }
        self.lookup[&set]
    }

    /// Index of the smallest normal subgroup of the parent containing `H_i`.
    pub fn normal_closure(&self, i: usize) -> usize {
        let mut gens = Vec::new();
        for &j in self.conjugates(i) {
            gens.extend_from_slice(&self.generators[j]);
        }
        self.lookup[&self.table.closure(&gens)]
    }

    /// Locates a subgroup of the parent given as a `Group`.
    pub fn index_of(&self, h: &Group) -> Option<usize> {
        if !h.is_subgroup_of(&self.parent) {
            return None;
        }
        let gens: Vec<u32> = h
            .generators()
            .iter()
            .map(|p| self.table.index_of(p))
            .collect::<Option<_>>()?;
        self.lookup.get(&self.table.closure(&gens)).copied()
    }

    /// Size of the literal set product `H_i H_j`.
    pub fn product_set_size(&self, i: usize, j: usize) -> usize {
        self.product_set(i, j).count_ones(..)
    }

    /// Whether `H_i H_j` (as a set) is a subgroup, i.e. the two permute.
    pub fn permutes(&self, i: usize, j: usize) -> bool {
        let set_size = self.order(i) * self.order(j) / self.intersection_order(i, j);
        self.order(self.join(i, j)) == set_size
    }

    /// Subgroups of `H_i` in canonical order.
    pub fn subgroups_of(&self, i: usize) -> Vec<usize> {
        (0..=i).filter(|&j| self.contains(i, j)).collect()
    }

    /// Index of `x^-1 H_i x` for an element `x` of the parent.
    pub fn conjugate_by_element(&self, i: usize, x: &Perm) -> Option<usize> {
        let t = self.table.index_of(x)?;
        Some(self.lookup[&self.table.conjugate_set(&self.members[i], t)])
    }

    /// The literal product set `H_i H_j` as a bitset over parent elements.
    pub fn product_set(&self, i: usize, j: usize) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.table.len());
        for a in self.members[i].ones() {
            for b in self.members[j].ones() {
                set.insert(self.table.mul(a as u32, b as u32) as usize);
            }
        }
        set
    }

    /// Index of `[H_i, H_j]`, generated by all commutators `[x, y]`.
    pub fn commutator(&self, i: usize, j: usize) -> usize {
        let t = &self.table;
        let mut gens = Vec::new();
        for x in self.members[i].ones() {
            for y in self.members[j].ones() {
                let (x, y) = (x as u32, y as u32);
                let c = t.mul(t.mul(t.inv(x), t.inv(y)), t.mul(x, y));
                gens.push(c);
            }
        }
        gens.sort_unstable();
        gens.dedup();
        self.lookup[&t.closure(&gens)]
    }

    /// Whether every element of `H_i` commutes with every element of `H_j`.
    pub fn centralizes(&self, i: usize, j: usize) -> bool {
        let (gi, gj) = (&self.generators[i], &self.generators[j]);
        gi.iter().all(|&x| {
            gj.iter()
                .all(|&y| self.table.mul(x, y) == self.table.mul(y, x))
        })
    }

    /// Whether `H_j` is a normal subgroup of `H_i`.
    pub fn is_normal_in(&self, j: usize, i: usize) -> bool {
        self.contains(i, j)
            && self.generators[i]
                .iter()
                .all(|&t| self.table.conjugate_set(&self.members[j], t) == self.members[j])
    }

    /// Index of the join of all normal subgroups whose order satisfies `keep`.
    pub fn join_of_normals(&self, keep: impl Fn(usize) -> bool) -> usize {
        let mut gens = Vec::new();
        for i in self.normal_indices() {
            if keep(i) {
                gens.extend_from_slice(&self.generators[i]);
            }
        }
        self.lookup[&self.table.closure(&gens)]
    }
}

/// How [`chief_series_with`] picks among several minimal normal steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TieBreak {
    /// Smallest order, then smallest canonical element list.
    Smallest,
    /// Largest order, then largest canonical element list.
    Largest,
}

/// A chief factor `above / below` of some group.
#[derive(Clone, Debug)]
pub struct ChiefFactor {
    pub below: Group,
    pub above: Group,
}

impl ChiefFactor {
    pub fn factor_order(&self) -> u64 {
        self.above.order() / self.below.order()
    }
}

/// All normal subgroups of `g` in canonical order.
///
/// Computed directly from conjugacy classes: every normal subgroup is a join
/// of subgroups generated by single conjugacy classes. The result is cached
/// on the group.
pub fn normal_subgroups(g: &Group) -> Result<Vec<Group>> {
    if let Some(cached) = g.cached_normal_subgroups() {
        return Ok(cached.to_vec());
    }
    let degree = g.degree();
    let classes = conjugacy_classes(g)?;
    let mut seen: HashSet<Vec<Perm>> = HashSet::new();
    let mut all: Vec<Group> = Vec::new();
    let mut add = |h: Group, all: &mut Vec<Group>| -> Result<bool> {
        let key = h.elements()?.to_vec();
        if seen.insert(key) {
            all.push(h);
            Ok(true)
        } else {
            Ok(false)
        }
    };
    add(Group::trivial(degree), &mut all)?;
    let mut class_closures = Vec::new();
    for class in classes.iter().filter(|c| !c[0].is_identity()) {
        let h = generate(degree, class.iter().cloned());
        if add(h.clone(), &mut all)? {
            class_closures.push(h);
        }
    }
    let mut frontier: Vec<Group> = class_closures.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for n in &frontier {
            for c in &class_closures {
                if c.is_subgroup_of(n) {
                    continue;
                }
                let j = generate(degree, n.generators().iter().chain(c.generators()).cloned());
                if add(j.clone(), &mut all)? {
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    all.sort_by(|a, b| a.canonical_cmp(b));
    Ok(g.store_normal_subgroups(all).to_vec())
}

/// Nontrivial normal subgroups containing no smaller nontrivial normal
/// subgroup.
pub fn minimal_normal_subgroups(g: &Group) -> Result<Vec<Group>> {
    if g.is_trivial() {
        return Err(Error::TrivialGroup);
    }
    let normals = normal_subgroups(g)?;
    Ok(minimal_above(&normals, &Group::trivial(g.degree())))
}

/// Members of `normals` strictly above `base` with nothing of `normals`
/// strictly in between.
fn minimal_above(normals: &[Group], base: &Group) -> Vec<Group> {
    let above: Vec<&Group> = normals
        .iter()
        .filter(|m| m.order() > base.order() && base.is_subgroup_of(m))
        .collect();
    above
        .iter()
        .filter(|m| {
            !above
                .iter()
                .any(|k| k.order() < m.order() && k.is_subgroup_of(m))
        })
        .map(|m| (*m).clone())
        .collect()
}

/// Chief series with the canonical tie-break ([`TieBreak::Smallest`]).
pub fn chief_series(g: &Group) -> Result<Vec<ChiefFactor>> {
    chief_series_with(g, TieBreak::Smallest)
}

/// A chief series `1 = N_0 < ... < N_k = G`; empty for the trivial group.
pub fn chief_series_with(g: &Group, tie: TieBreak) -> Result<Vec<ChiefFactor>> {
    let normals = normal_subgroups(g)?;
    let mut current = Group::trivial(g.degree());
    let mut series = Vec::new();
    while current.order() < g.order() {
        // Normal subgroups are canonically sorted, so the first candidate is
        // the smallest and the last is the largest.
        let candidates = minimal_above(&normals, &current);
        let next = match tie {
            TieBreak::Smallest => candidates.first(),
            TieBreak::Largest => candidates.last(),
        }
        .expect("G itself lies above every proper normal subgroup")
        .clone();
        series.push(ChiefFactor {
            below: current,
            above: next.clone(),
        });
        current = next;
    }
    Ok(series)
}

/// `C_G(H/K) = { g : [g, h] ∈ K for all h ∈ H }`.
pub fn centralizer_of_chief_factor(g: &Group, f: &ChiefFactor) -> Result<Group> {
    if !f.above.is_subgroup_of(g) || !f.below.is_subgroup_of(&f.above) {
        return Err(Error::NotChiefFactor);
    }
    let hg = f.above.generators();
    let kept: Vec<Perm> = g
        .elements()?
        .iter()
        .filter(|x| hg.iter().all(|h| f.below.contains(&Perm::commutator(x, h))))
        .cloned()
        .collect();
    let sub = generate(g.degree(), kept.iter().cloned());
    debug_assert_eq!(sub.order(), kept.len() as u64);
    Ok(Group::with_elements(
        g.degree(),
        sub.generators().to_vec(),
        kept,
    ))
}

/// `G/N` as a permutation group on the cosets of `N`.
pub fn quotient(g: &Group, n: &Group) -> Result<Group> {
    if !n.is_normal_in(g) {
        return Err(if n.is_subgroup_of(g) {
            Error::NotNormal
        } else {
            Error::NotSubgroup("quotient kernel")
        });
    }
    let els = g.elements()?;
    let nels = n.elements()?;
    let mut coset = vec![usize::MAX; els.len()];
    let mut count = 0;
    for i in 0..els.len() {
        if coset[i] != usize::MAX {
            continue;
        }
        for m in nels {
            let j = els.binary_search(&els[i].mul(m)).expect("coset inside G");
            coset[j] = count;
        }
        count += 1;
    }
    // Representative of each coset: its first element.
    let mut reps = vec![usize::MAX; count];
    for (i, &c) in coset.iter().enumerate() {
        if reps[c] == usize::MAX {
            reps[c] = i;
        }
    }
    let gens = g
        .generators()
        .iter()
        .map(|t| {
            let images = reps
                .iter()
                .map(|&r| {
                    let j = els
                        .binary_search(&t.mul(&els[r]))
                        .expect("product inside G");
                    coset[j] as u32
                })
                .collect();
            Perm::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    Group::new(count, gens)
}
