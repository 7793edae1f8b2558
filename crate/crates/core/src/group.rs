//! Permutation groups given by generators, backed by a stabilizer chain for
//! order and membership and by a cached, canonically sorted element list for
//! everything that works elementwise.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::chain::StabChain;
use crate::error::{Error, Result};
use crate::perm::Perm;

/// Default bound on `|G|` for anything that lists elements.
pub const DEFAULT_ELEMENT_LIMIT: u64 = 100_000;

struct Inner {
    degree: usize,
    generators: Vec<Perm>,
    chain: StabChain,
    order: u64,
    elements: OnceLock<Arc<[Perm]>>,
    normal_subgroups: OnceLock<Arc<[Group]>>,
}

/// An immutable permutation group. Cloning is cheap and shares caches.
#[derive(Clone)]
pub struct Group {
    inner: Arc<Inner>,
}

impl Group {
    /// Builds the group generated by `generators` on `degree` points.
    ///
    /// An empty generator list gives the trivial group.
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPerm("degree must be positive".into()));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
        let chain = StabChain::from_generators(degree, &generators);
        Ok(Self::from_parts(degree, generators, chain, None))
    }

    /// Builds a group from cycle-notation generators.
    pub fn from_cycle_strings<S: AsRef<str>>(degree: usize, generators: &[S]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|s| Perm::parse(s.as_ref(), Some(degree)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, gens)
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new()).expect("positive degree")
    }

    /// Subgroup whose sorted element list is already known.
    pub(crate) fn with_elements(degree: usize, generators: Vec<Perm>, elements: Vec<Perm>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let chain = StabChain::from_generators(degree, &generators);
        debug_assert_eq!(chain.order(), elements.len() as u64);
        Self::from_parts(degree, generators, chain, Some(elements))
    }

    fn from_parts(
        degree: usize,
        generators: Vec<Perm>,
        chain: StabChain,
        elements: Option<Vec<Perm>>,
    ) -> Self {
        let order = chain.order();
        let cell = OnceLock::new();
        if let Some(els) = elements {
            let _ = cell.set(Arc::from(els));
        }
        Group {
            inner: Arc::new(Inner {
                degree,
                generators,
                chain,
                order,
                elements: cell,
                normal_subgroups: OnceLock::new(),
            }),
        }
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.inner.generators
    }

    pub fn order(&self) -> u64 {
        self.inner.order
    }

    pub fn base(&self) -> Vec<usize> {
        self.inner.chain.base()
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree())
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// Membership by sifting through the stabilizer chain.
    pub fn contains(&self, p: &Perm) -> bool {
        self.inner.chain.contains(p)
    }

    /// All elements in lexicographic order of image sequences.
    pub fn elements(&self) -> Result<&[Perm]> {
        self.elements_within(DEFAULT_ELEMENT_LIMIT)
    }

    pub fn elements_within(&self, limit: u64) -> Result<&[Perm]> {
        if let Some(els) = self.inner.elements.get() {
            return Ok(els);
        }
        if self.order() > limit {
            return Err(Error::ElementThreshold {
                order: self.order(),
                limit,
            });
        }
        let mut els = self.inner.chain.elements();
        els.sort_unstable();
        let _ = self.inner.elements.set(Arc::from(els));
        Ok(self.inner.elements.get().unwrap())
    }

    pub fn is_subgroup_of(&self, other: &Group) -> bool {
        self.degree() == other.degree()
            && other.order().is_multiple_of(self.order())
            && self.generators().iter().all(|g| other.contains(g))
    }

    /// `self` is normal in `ambient` (and contained in it).
    pub fn is_normal_in(&self, ambient: &Group) -> bool {
        self.is_subgroup_of(ambient)
            && ambient.generators().iter().all(|g| {
                self.generators()
                    .iter()
                    .all(|h| self.contains(&h.conjugate_by(g)))
            })
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// Order first, then lexicographic comparison of the sorted element lists.
    pub fn canonical_cmp(&self, other: &Group) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| match (self.elements(), other.elements()) {
                (Ok(a), Ok(b)) => a.cmp(b),
                _ => self.generators().cmp(other.generators()),
            })
    }

    /// Conjugate subgroup `x^-1 self x`.
    pub fn conjugate_by(&self, x: &Perm) -> Group {
        let gens = self
            .generators()
            .iter()
            .map(|g| g.conjugate_by(x))
            .collect();
        Group::new(self.degree(), gens).expect("degrees agree")
    }

    /// Multiset of element orders, sorted.
    pub fn element_order_profile(&self) -> Result<Vec<u64>> {
        let mut v: Vec<u64> = self.elements()?.iter().map(Perm::order).collect();
        v.sort_unstable();
        Ok(v)
    }

    pub(crate) fn cached_normal_subgroups(&self) -> Option<&[Group]> {
        self.inner.normal_subgroups.get().map(|a| &a[..])
    }

    pub(crate) fn store_normal_subgroups(&self, normals: Vec<Group>) -> &[Group] {
        let _ = self.inner.normal_subgroups.set(Arc::from(normals));
        self.inner.normal_subgroups.get().unwrap()
    }

    /// Short text form: `<gen, gen, ...> (order n)`.
    pub fn describe(&self) -> String {
        let gens: Vec<String> = self.generators().iter().map(|g| g.to_string()).collect();
        format!("<{}> (order {})", gens.join(", "), self.order())
    }
}

/// Element-set equality.
impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.order() == other.order() && self.is_subgroup_of(other))
    }
}

impl Eq for Group {}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group{}", self.describe())
    }
}

fn require_subgroup(ambient: &Group, sub: &Group, what: &'static str) -> Result<()> {
    if sub.degree() != ambient.degree() {
        return Err(Error::DegreeMismatch {
            left: ambient.degree(),
            right: sub.degree(),
        });
    }
    if !sub.is_subgroup_of(ambient) {
        return Err(Error::NotSubgroup(what));
    }
    Ok(())
}

/// Subgroup generated by a list of permutations, pruning redundant ones.
pub(crate) fn generate(degree: usize, candidates: impl IntoIterator<Item = Perm>) -> Group {
    let mut chain = StabChain::new(degree);
    let mut gens = Vec::new();
    for g in candidates {
        if chain.add_generator(&g) {
            gens.push(g);
        }
    }
    Group::from_parts(degree, gens, chain, None)
}

/// Build the group generated by `gens` (all of one degree).
pub fn build_group(gens: Vec<Perm>) -> Result<Group> {
    let degree = gens.first().map(Perm::degree).unwrap_or(1);
    Group::new(degree, gens)
}

/// Smallest normal subgroup of `g` containing `s`.
pub fn normal_closure(g: &Group, s: &Group) -> Result<Group> {
    require_subgroup(g, s, "normal_closure argument")?;
    let degree = g.degree();
    let mut chain = StabChain::new(degree);
    let mut gens = Vec::new();
    let mut queue: VecDeque<Perm> = VecDeque::new();
    for x in s.generators() {
        if chain.add_generator(x) {
            gens.push(x.clone());
            queue.push_back(x.clone());
        }
    }
    while let Some(x) = queue.pop_front() {
        for y in g.generators() {
            let c = x.conjugate_by(y);
            if chain.add_generator(&c) {
                gens.push(c.clone());
                queue.push_back(c);
            }
        }
    }
    Ok(Group::from_parts(degree, gens, chain, None))
}

/// Elements of `g` commuting with every generator of `h`.
pub fn centralizer(g: &Group, h: &Group) -> Result<Group> {
    if g.degree() != h.degree() {
        return Err(Error::DegreeMismatch {
            left: g.degree(),
            right: h.degree(),
        });
    }
    h.elements()?;
    let hg = h.generators();
    filter_subgroup(g, |x| hg.iter().all(|y| x.commutes_with(y)))
}

/// Core of `b` in `g`: the intersection of all `g`-conjugates of `b`.
pub fn core(g: &Group, b: &Group) -> Result<Group> {
    require_subgroup(g, b, "core argument")?;
    // x lies in the core iff every conjugate of x by g lies in b.
    let conj_closed = |x: &Perm| -> bool {
        let mut seen: HashSet<Perm> = HashSet::new();
        let mut stack = vec![x.clone()];
        while let Some(y) = stack.pop() {
            if !seen.insert(y.clone()) {
                continue;
            }
            if !b.contains(&y) {
                return false;
            }
            for t in g.generators() {
                stack.push(y.conjugate_by(t));
            }
        }
        true
    };
    filter_subgroup(b, conj_closed)
}

/// `a ∩ b` by filtering the elements of the smaller group.
pub fn intersect(a: &Group, b: &Group) -> Result<Group> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    let (small, large) = if a.order() <= b.order() {
        (a, b)
    } else {
        (b, a)
    };
    filter_subgroup(small, |x| large.contains(x))
}

/// `<a, b>` inside `g`.
pub fn join(g: &Group, a: &Group, b: &Group) -> Result<Group> {
    require_subgroup(g, a, "join argument")?;
    require_subgroup(g, b, "join argument")?;
    Ok(generate(
        g.degree(),
        a.generators().iter().chain(b.generators()).cloned(),
    ))
}

/// Subgroup generated by all commutators `[x, y]` with `x ∈ a`, `y ∈ b`.
pub fn commutator_subgroup(a: &Group, b: &Group) -> Result<Group> {
    let (ea, eb) = (a.elements()?, b.elements()?);
    let mut out = generate(a.degree(), std::iter::empty());
    let mut gens = Vec::new();
    for x in ea {
        for y in eb {
            let c = Perm::commutator(x, y);
            if !out.contains(&c) {
                gens.push(c);
                out = generate(a.degree(), gens.iter().cloned());
            }
        }
    }
    Ok(out)
}

/// Direct product acting on the disjoint union of the two point sets.
pub fn direct_product(a: &Group, b: &Group) -> Group {
    let (m, n) = (a.degree(), b.degree());
    let lift = |p: &Perm, shift: usize| -> Perm {
        let mut images: Vec<u32> = (0..(m + n) as u32).collect();
        for (i, &x) in p.images().iter().enumerate() {
            images[i + shift] = x + shift as u32;
        }
        Perm::from_images(images).expect("lifted permutation")
    };
    let gens = a
        .generators()
        .iter()
        .map(|p| lift(p, 0))
        .chain(b.generators().iter().map(|p| lift(p, m)))
        .collect();
    Group::new(m + n, gens).expect("consistent degree")
}

/// Subgroup of `g` consisting of the elements satisfying `keep`, which the
/// caller guarantees to be closed under multiplication.
fn filter_subgroup(g: &Group, keep: impl Fn(&Perm) -> bool) -> Result<Group> {
    let kept: Vec<Perm> = g.elements()?.iter().filter(|x| keep(x)).cloned().collect();
    let sub = generate(g.degree(), kept.iter().cloned());
    debug_assert_eq!(sub.order(), kept.len() as u64);
    let gens = sub.generators().to_vec();
    Ok(Group::with_elements(g.degree(), gens, kept))
}

/// Conjugacy classes of elements, each sorted, ordered by first element.
pub fn conjugacy_classes(g: &Group) -> Result<Vec<Vec<Perm>>> {
    let els = g.elements()?;
    let mut seen: HashSet<&Perm> = HashSet::new();
    let mut classes = Vec::new();
    for x in els {
        if seen.contains(x) {
            continue;
        }
        let mut class = vec![x.clone()];
        let mut set: HashSet<Perm> = HashSet::from([x.clone()]);
        let mut k = 0;
        while k < class.len() {
            for t in g.generators() {
                let y = class[k].conjugate_by(t);
                if set.insert(y.clone()) {
                    class.push(y);
                }
            }
            k += 1;
        }
        class.sort_unstable();
        for y in &class {
            let pos = els.binary_search(y).expect("conjugate stays in group");
            seen.insert(&els[pos]);
        }
        classes.push(class);
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(n: usize, gens: &[&str]) -> Group {
        Group::from_cycle_strings(n, gens).unwrap()
    }

    fn s4() -> Group {
        grp(4, &["(1 2)", "(1 2 3 4)"])
    }

    fn v4() -> Group {
        grp(4, &["(1 2)(3 4)", "(1 3)(2 4)"])
    }

    fn a5() -> Group {
        grp(5, &["(1 2 3)", "(3 4 5)"])
    }

    #[test]
    fn standard_orders() {
        assert_eq!(s4().order(), 24);
        assert_eq!(a5().order(), 60);
        assert_eq!(Group::trivial(3).order(), 1);
    }

    #[test]
    fn mixed_degree_generators_rejected() {
        let gens = vec![
            Perm::parse("(1 2)", Some(2)).unwrap(),
            Perm::parse("(1 2 3)", Some(3)).unwrap(),
        ];
        assert!(matches!(
            build_group(gens),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn membership() {
        let g = a5();
        assert!(!g.contains(&Perm::parse("(1 2)", Some(5)).unwrap()));
        assert!(g.contains(&Perm::identity(5)));
        assert!(g.contains(&Perm::parse("(1 2 3 4 5)", Some(5)).unwrap()));
    }

    #[test]
    fn element_lists() {
        assert_eq!(Group::trivial(4).elements().unwrap(), &[Perm::identity(4)]);
        let c2 = grp(2, &["(1 2)"]);
        assert_eq!(c2.elements().unwrap().len(), 2);
        let a4 = grp(4, &["(1 2 3)", "(2 3 4)"]);
        let els = a4.elements().unwrap();
        assert_eq!(els.len(), 12);
        assert!(els.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn element_threshold() {
        let s8 = grp(8, &["(1 2)", "(1 2 3 4 5 6 7 8)"]);
        assert_eq!(s8.order(), 40320);
        assert!(matches!(
            s8.elements_within(1000),
            Err(Error::ElementThreshold {
                order: 40320,
                limit: 1000
            })
        ));
    }

    #[test]
    fn normal_closures() {
        assert_eq!(normal_closure(&s4(), &v4()).unwrap(), v4());
        assert_eq!(normal_closure(&a5(), &grp(5, &["(1 2 3)"])).unwrap(), a5());
        assert_eq!(normal_closure(&s4(), &grp(4, &["(1 2)"])).unwrap(), s4());
        assert!(normal_closure(&a5(), &grp(5, &["(1 2)"])).is_err());
    }

    #[test]
    fn centralizers() {
        let g = s4();
        assert_eq!(centralizer(&g, &Group::trivial(4)).unwrap(), g);
        assert_eq!(centralizer(&g, &v4()).unwrap(), v4());
        let c6 = grp(6, &["(1 2 3 4 5 6)"]);
        assert_eq!(centralizer(&c6, &c6).unwrap(), c6);
    }

    #[test]
    fn cores() {
        let d8 = grp(4, &["(1 2 3 4)", "(1 3)"]);
        assert_eq!(core(&s4(), &d8).unwrap(), v4());
        assert_eq!(core(&s4(), &v4()).unwrap(), v4());
        let a4 = grp(5, &["(1 2 3)", "(2 3 4)"]);
        assert!(core(&a5(), &a4).unwrap().is_trivial());
    }

    #[test]
    fn intersections_and_joins() {
        let d8 = grp(4, &["(1 2 3 4)", "(1 3)"]);
        let c3 = grp(4, &["(1 2 3)"]);
        assert_eq!(intersect(&d8, &d8).unwrap(), d8);
        assert!(intersect(&d8, &c3).unwrap().is_trivial());
        let j = join(&s4(), &grp(4, &["(1 2)"]), &grp(4, &["(1 2 3 4)"])).unwrap();
        assert_eq!(j, s4());
    }

    #[test]
    fn commutators() {
        let d = commutator_subgroup(&s4(), &s4()).unwrap();
        assert_eq!(d.order(), 12);
        assert!(commutator_subgroup(&v4(), &v4()).unwrap().is_trivial());
    }

    #[test]
    fn products_and_classes() {
        let p = direct_product(&grp(3, &["(1 2 3)"]), &grp(2, &["(1 2)"]));
        assert_eq!(p.order(), 6);
        assert!(p.is_abelian());
        let classes = conjugacy_classes(&s4()).unwrap();
        let mut sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
    }
}
