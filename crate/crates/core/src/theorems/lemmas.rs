//! The lemma battery. Each lemma is instantiated wherever its premises arise
//! in a group; a failed conclusion points at a bug, since the lemmas hold.
//! Instances are tallied into one verdict per lemma and group (and partition,
//! for the σ-dependent lemmas).

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::Result;
use crate::factor::{factorizes, find_factorizations, product_hall_check, Factorization};
use crate::group::direct_product;
use crate::hall::hall_analysis;
use crate::sigma::{is_sigma_nilpotent_hall, pi_part, prime_set, ChiefProfile, SigmaPartition};

use super::{CheckKind, GroupAnalysis, SigmaView, Verdict};

/// Groups up to this order also have `G × G` checked for σ-solubility.
pub const SQUARE_ORDER_LIMIT: u64 = 24;

#[derive(Default)]
struct Tally {
    instances: usize,
    failures: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn record(&mut self, holds: bool, what: impl FnOnce() -> String) {
        self.instances += 1;
        if !holds {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    fn verdict(
        self,
        check: &str,
        group: &str,
        sigma: Option<&SigmaPartition>,
        premise: &str,
    ) -> Verdict {
        let v = Verdict::new(check, CheckKind::Lemma, group, sigma);
        if self.instances == 0 {
            return v.not_applicable(format!("premise never arises: {premise}"));
        }
        let mut v = v
            .witness("instances", self.instances)
            .witness("failures", self.failures);
        if let Some(f) = self.first_failure {
            v = v.witness("first_failure", f);
        }
        v.decided(self.failures == 0)
    }
}

/// Nonempty subsets of a small set, in lexicographic order of bitmasks.
fn nonempty_subsets<T: Clone + Ord>(items: &[T]) -> Vec<BTreeSet<T>> {
    (1u32..1 << items.len())
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

fn pi_label(pi: &BTreeSet<u64>) -> String {
    let ps: Vec<String> = pi.iter().map(u64::to_string).collect();
    format!("{{{}}}", ps.join(","))
}

/// Partition-independent lemmas: contain, con (both parts), proper,
/// Dproperty and product.
pub fn run_group_lemmas(an: &GroupAnalysis) -> Result<Vec<Verdict>> {
    let lat = &an.lattice;
    let top = lat.top_index();
    let name = an.name.as_str();
    let facts = find_factorizations(lat, |_, _| true);
    let primes: Vec<u64> = prime_set(an.group().order()).into_iter().collect();
    let prime_sets = nonempty_subsets(&primes);
    let pair = |f: &Factorization| format!("A = {}, B = {}", an.describe(f.a), an.describe(f.b));

    // contain: G = AB, L normal in A, L ≤ B  ⇒  L ≤ B_G.
    let mut contain = Tally::default();
    for f in &facts {
        for (a, b) in [(f.a, f.b), (f.b, f.a)] {
            let core = lat.core(b);
            for l in lat.subgroups_of(a) {
                if lat.contains(b, l) && lat.is_normal_in(l, a) {
                    contain.record(lat.contains(core, l), || {
                        format!("{}, L = {}", pair(f), an.describe(l))
                    });
                }
            }
        }
    }

    // con: G = AB with A, B proper.
    let mut sylow_product = Tally::default();
    let mut conjugate_factor = Tally::default();
    for f in facts.iter().filter(|f| f.proper) {
        for &p in &primes {
            let target = pi_part(an.group().order(), &BTreeSet::from([p]));
            let sylows = |h: usize| -> Vec<usize> {
                let order = pi_part(lat.order(h), &BTreeSet::from([p]));
                lat.subgroups_of(h)
                    .into_iter()
                    .filter(|&x| lat.order(x) == order)
                    .collect()
            };
            let (sa, sb) = (sylows(f.a), sylows(f.b));
            let found = sa.iter().any(|&x| {
                sb.iter().any(|&y| {
                    lat.order(x) * lat.order(y) == target * lat.intersection_order(x, y)
                        && lat.permutes(x, y)
                })
            });
            sylow_product.record(found, || format!("{}, p = {p}", pair(f)));
        }
        let holds = lat
            .conjugates(f.a)
            .iter()
            .all(|&ax| factorizes(lat, ax, f.b) && !factorizes(lat, f.a, ax));
        conjugate_factor.record(holds, || pair(f));
    }

    // proper: A, B proper, AB ≠ G, AB^x = B^x A for all x  ⇒  some proper
    // normal N contains A or B. Premise and conclusion depend only on the
    // class of B, so one conjugate per class is enough.
    let mut proper = Tally::default();
    let normals = lat.normal_indices();
    for a in lat
        .class_representatives()
        .into_iter()
        .filter(|&a| a != top)
    {
        for class in lat.classes().iter().filter(|c| c[0] != top) {
            let Some(&b) = class.iter().find(|&&b| !factorizes(lat, a, b)) else {
                continue;
            };
            if !class.iter().all(|&bx| lat.permutes(a, bx)) {
                continue;
            }
            let holds = normals
                .iter()
                .any(|&n| n != top && (lat.contains(n, a) || lat.contains(n, b)));
            proper.record(holds, || {
                format!("A = {}, B = {}", an.describe(a), an.describe(b))
            });
        }
    }

    // Dproperty: D_π passes to every quotient.
    let mut dproperty = Tally::default();
    let quotients = an.quotients()?;
    for pi in &prime_sets {
        if !hall_analysis(lat, pi).dominated {
            continue;
        }
        for q in quotients {
            dproperty.record(hall_analysis(&q.lattice, pi).dominated, || {
                format!("pi = {}, N = {}", pi_label(pi), an.describe(q.normal))
            });
        }
    }

    // product: G = AB with D_π and normal Hall π-subgroups of A and B.
    let mut product = Tally::default();
    let dominated: Vec<bool> = prime_sets
        .iter()
        .map(|pi| hall_analysis(lat, pi).dominated)
        .collect();
    for f in &facts {
        for (pi, _) in prime_sets.iter().zip(&dominated).filter(|(_, &d)| d) {
            let r = product_hall_check(lat, f.a, f.b, pi);
            if r.applicable() {
                product.record(r.holds(), || format!("{}, pi = {}", pair(f), pi_label(pi)));
            }
        }
    }

    Ok(vec![
        contain.verdict(
            "lemma_contain",
            name,
            None,
            "G = AB with L normal in A and L <= B",
        ),
        sylow_product.verdict("lemma_con_sylow", name, None, "G = AB with A, B proper"),
        conjugate_factor.verdict("lemma_con_conjugate", name, None, "G = AB with A, B proper"),
        proper.verdict(
            "lemma_proper",
            name,
            None,
            "A, B proper, G != AB and A permutes with every conjugate of B",
        ),
        dproperty.verdict("lemma_dproperty", name, None, "G satisfies D_pi"),
        product.verdict(
            "lemma_product",
            name,
            None,
            "G = AB satisfying D_pi with normal Hall pi-subgroups of A and B",
        ),
    ])
}

/// σ-dependent lemmas: closure of σ-solubility, normal σ-nilpotent joins,
/// Hall properties of σ-soluble groups, and the two σ-nilpotency criteria.
pub fn run_sigma_lemmas(view: &SigmaView) -> Result<Vec<Verdict>> {
    let an = view.analysis;
    let lat = view.lattice();
    let top = view.top();
    let name = an.name.as_str();
    let sigma = Some(view.sigma);
    let soluble = view.group_soluble();
    let quotients = an.quotients()?;

    // soluble: closed under subgroups, quotients, extensions and G × G.
    let mut closure = Tally::default();
    for q in quotients {
        let image = q.profile.sigma_soluble(view.sigma)?;
        if soluble {
            closure.record(image, || format!("quotient by {}", an.describe(q.normal)));
        }
        if view.soluble[q.normal] && image {
            closure.record(soluble, || {
                format!("extension of {}", an.describe(q.normal))
            });
        }
    }
    if soluble {
        for i in 0..lat.len() {
            closure.record(view.soluble[i], || format!("subgroup {}", an.describe(i)));
        }
        if let Some(square) = square_profile(an)? {
            closure.record(square.sigma_soluble(view.sigma)?, || "G x G".to_string());
        }
    }
    closure.record(view.soluble[view.radical()], || "R_sigma(G)".to_string());

    // normalnil: joins of normal σ-nilpotent subgroups stay σ-nilpotent.
    let mut normalnil = Tally::default();
    let nil_normals: Vec<usize> = lat
        .normal_indices()
        .into_iter()
        .filter(|&n| view.nilpotent[n])
        .collect();
    for (k, &a) in nil_normals.iter().enumerate() {
        for &b in &nil_normals[k..] {
            normalnil.record(view.nilpotent[lat.join(a, b)], || {
                format!("A = {}, B = {}", an.describe(a), an.describe(b))
            });
        }
    }
    let fitting = view.fitting();
    normalnil.record(
        view.nilpotent[fitting] && nil_normals.iter().all(|&n| lat.contains(fitting, n)),
        || "F_sigma(G)".to_string(),
    );

    // D: a σ-soluble group satisfies D_Π for every union Π of classes.
    let mut lemma_d = Tally::default();
    if soluble {
        let n = an.group().order();
        let ids: Vec<_> = view.signature.iter().collect();
        for chosen in nonempty_subsets(&ids) {
            let mut pi = BTreeSet::new();
            for &id in &chosen {
                pi.extend(view.sigma.class_primes_in(id, n)?);
            }
            lemma_d.record(hall_analysis(lat, &pi).dominated, || {
                format!("Pi = {}", pi_label(&pi))
            });
        }
    }

    // nilpotent: every chief factor σ-central ⇔ direct product of a complete
    // Hall σ-set.
    let mut criteria = Tally::default();
    let by_hall = is_sigma_nilpotent_hall(lat, view.sigma)?;
    criteria.record(view.nilpotent[top] == by_hall, || {
        format!(
            "chief factors: {}, Hall decomposition: {by_hall}",
            view.nilpotent[top]
        )
    });

    Ok(vec![
        closure.verdict(
            "lemma_soluble",
            name,
            sigma,
            "G or a normal subgroup and quotient sigma-soluble",
        ),
        normalnil.verdict(
            "lemma_normalnil",
            name,
            sigma,
            "normal sigma-nilpotent subgroups",
        ),
        lemma_d.verdict("lemma_d", name, sigma, "G sigma-soluble"),
        criteria.verdict("lemma_nilpotent", name, sigma, "always"),
    ])
}

fn square_profile(an: &GroupAnalysis) -> Result<Option<Arc<ChiefProfile>>> {
    an.square
        .get_or_init(|| {
            let g = an.group();
            if g.order() > SQUARE_ORDER_LIMIT {
                return Ok(None);
            }
            ChiefProfile::of(&direct_product(g, g)).map(|p| Some(Arc::new(p)))
        })
        .clone()
}
