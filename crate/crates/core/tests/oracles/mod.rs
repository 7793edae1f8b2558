//! Brute-force reference computations on raw image vectors. They share
//! nothing with the library beyond reading generator images, so agreement
//! with the library is evidence rather than tautology.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use sigmafact_core::Group;

pub type Images = Vec<u32>;

/// `(a ∘ b)(x) = a(b(x))`.
pub fn compose(a: &[u32], b: &[u32]) -> Images {
    b.iter().map(|&x| a[x as usize]).collect()
}

pub fn inverse(a: &[u32]) -> Images {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x as usize] = i as u32;
    }
    out
}

pub fn identity(degree: usize) -> Images {
    (0..degree as u32).collect()
}

/// Closure of a generating set under composition.
pub fn closure(degree: usize, gens: &[Images]) -> BTreeSet<Images> {
    let mut seen: HashSet<Images> = HashSet::new();
    let mut queue = vec![identity(degree)];
    seen.insert(identity(degree));
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = compose(g, &x);
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

pub fn generator_images(g: &Group) -> Vec<Images> {
    g.generators().iter().map(|p| p.images().to_vec()).collect()
}

pub fn elements(g: &Group) -> BTreeSet<Images> {
    closure(g.degree(), &generator_images(g))
}

/// All subgroups: cyclic subgroups, then joins of pairs of known subgroups
/// until no new subgroup appears.
pub fn subgroups(g: &Group) -> BTreeSet<BTreeSet<Images>> {
    let degree = g.degree();
    let elems = elements(g);
    let mut found: Vec<(BTreeSet<Images>, Vec<Images>)> = Vec::new();
    let mut seen: HashSet<BTreeSet<Images>> = HashSet::new();
    for x in &elems {
        let h = closure(degree, std::slice::from_ref(x));
        if seen.insert(h.clone()) {
            found.push((h, vec![x.clone()]));
        }
    }
    let mut start = 0;
    loop {
        let before = found.len();
        for i in 0..before {
            for j in start.max(i + 1)..before {
                if found[i].0.is_subset(&found[j].0) || found[j].0.is_subset(&found[i].0) {
                    continue;
                }
                let mut gens = found[i].1.clone();
                gens.extend(found[j].1.iter().cloned());
                let h = closure(degree, &gens);
                if seen.insert(h.clone()) {
                    found.push((h, gens));
                }
            }
        }
        if found.len() == before {
            break;
        }
        start = before;
    }
    found.into_iter().map(|(h, _)| h).collect()
}

fn commutator_subgroup(degree: usize, set: &BTreeSet<Images>) -> BTreeSet<Images> {
    let mut gens = BTreeSet::new();
    for a in set {
        for b in set {
            let c = compose(&compose(&inverse(a), &inverse(b)), &compose(a, b));
            gens.insert(c);
        }
    }
    closure(degree, &gens.into_iter().collect::<Vec<_>>())
}

/// Soluble iff the derived series reaches the trivial group.
pub fn is_soluble(g: &Group) -> bool {
    let mut current = elements(g);
    loop {
        if current.len() == 1 {
            return true;
        }
        let next = commutator_subgroup(g.degree(), &current);
        if next.len() == current.len() {
            return false;
        }
        current = next;
    }
}

fn element_order(x: &[u32]) -> u64 {
    let id = identity(x.len());
    let mut y = x.to_vec();
    let mut k = 1;
    while y != id {
        y = compose(x, &y);
        k += 1;
    }
    k
}

fn primes_of(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Nilpotent iff every Sylow subgroup is normal, i.e. for each prime `p` the
/// elements of `p`-power order number exactly the `p`-part of `|G|`.
pub fn is_nilpotent(g: &Group) -> bool {
    let elems = elements(g);
    let n = elems.len() as u64;
    let orders: Vec<u64> = elems.iter().map(|x| element_order(x)).collect();
    primes_of(n).into_iter().all(|p| {
        let mut part = 1;
        while n.is_multiple_of(part * p) {
            part *= p;
        }
        let p_elements = orders.iter().filter(|&&o| part % o == 0).count() as u64;
        p_elements == part
    })
}

/// Size of the literal set `{ab : a ∈ A, b ∈ B}`.
pub fn set_product_size(a: &Group, b: &Group) -> usize {
    let (ea, eb) = (elements(a), elements(b));
    let mut out = HashSet::new();
    for x in &ea {
        for y in &eb {
            out.insert(compose(x, y));
        }
    }
    out.len()
}
