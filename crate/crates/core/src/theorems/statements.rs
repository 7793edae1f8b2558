use crate::factor::{factorizes, find_factorizations, find_triple_factorizations, Factorization};
use crate::hall::{hall_analysis, hall_indices};
use crate::sigma::{is_pi_number, prime_set, ClassId};

use super::{CheckKind, SigmaView, Verdict};

/// All `G = AB` with `A`, `B` σ-nilpotent (proper or not).
pub(crate) fn nilpotent_factorizations(view: &SigmaView) -> Vec<Factorization> {
    find_factorizations(view.lattice(), |a, b| {
        view.nilpotent[a] && view.nilpotent[b]
    })
}

/// For a σ-soluble `G = AB` with σ-nilpotent factors and minimal normal `N`,
/// one of `AN`, `BN` is σ-nilpotent. One verdict per `(A, B, N)`.
pub fn verify_theorem1(view: &SigmaView) -> Vec<Verdict> {
    let an = view.analysis;
    let lat = view.lattice();
    let base = || Verdict::new("theorem1", CheckKind::Theorem, &an.name, Some(view.sigma));
    let facts = nilpotent_factorizations(view);
    let mins = an.minimal_normals();
    if facts.is_empty() || mins.is_empty() {
        return vec![base().not_applicable(if mins.is_empty() {
            "no minimal normal subgroup (trivial group)"
        } else {
            "no factorization by two sigma-nilpotent subgroups"
        })];
    }
    let soluble = view.group_soluble();
    let mut out = Vec::with_capacity(facts.len() * mins.len());
    for f in &facts {
        for &n in mins {
            let v = base()
                .witness("A", an.describe(f.a))
                .witness("B", an.describe(f.b))
                .witness("N", an.describe(n))
                .witness("proper", f.proper);
            if !soluble {
                out.push(v.not_applicable("G is not sigma-soluble"));
                continue;
            }
            let (a_n, b_n) = (lat.join(f.a, n), lat.join(f.b, n));
            // N is normal, so AN is a subgroup; confirm the set product fills the join.
            let products_are_subgroups = [(f.a, a_n), (f.b, b_n)].iter().all(|&(x, xn)| {
                lat.order(xn) * lat.intersection_order(x, n) == lat.order(x) * lat.order(n)
            });
            let holds = products_are_subgroups && (view.nilpotent[a_n] || view.nilpotent[b_n]);
            let mut v = v
                .witness("AN", an.describe(a_n))
                .witness("BN", an.describe(b_n))
                .witness("AN_sigma_nilpotent", view.nilpotent[a_n])
                .witness("BN_sigma_nilpotent", view.nilpotent[b_n])
                .decided(holds);
            if !products_are_subgroups {
                v = v.note("a product with N is not a subgroup");
            }
            out.push(v);
        }
    }
    out
}

/// If `G = AB = BC = CA` with σ-nilpotent factors and `G` satisfies
/// `D_{σ_i}` for some `σ_i ∈ σ(G)`, then `G` is σ-nilpotent. Every triple
/// shares the conclusion, so one verdict covers all triples of a group.
pub fn verify_theorem2(view: &SigmaView) -> Vec<Verdict> {
    let an = view.analysis;
    let lat = view.lattice();
    let v = Verdict::new("theorem2", CheckKind::Theorem, &an.name, Some(view.sigma));
    let triples = find_triple_factorizations(lat, |i| view.nilpotent[i]);
    let Some(first) = triples.first() else {
        return vec![v.not_applicable("no triple factorization by sigma-nilpotent subgroups")];
    };
    let verified = triples.iter().all(|t| {
        let c = t.c.expect("triple");
        factorizes(lat, t.a, t.b) && factorizes(lat, t.b, c) && factorizes(lat, c, t.a)
    });
    let proper = triples.iter().filter(|t| t.proper).count();
    let v = v
        .witness("triples", triples.len())
        .witness("proper_triples", proper)
        .witness("A", an.describe(first.a))
        .witness("B", an.describe(first.b))
        .witness("C", an.describe(first.c.expect("triple")));
    let n = an.group().order();
    let d_class = view.signature.iter().find(|&id| {
        let pi = view
            .sigma
            .class_primes_in(id, n)
            .expect("class of the signature");
        hall_analysis(lat, &pi).dominated
    });
    let Some(id) = d_class else {
        return vec![v.not_applicable("G satisfies D_sigma_i for no sigma_i in sigma(G)")];
    };
    let mut v = v
        .witness("D_class", view.sigma.class_label(id))
        .witness("G_sigma_nilpotent", view.group_nilpotent())
        .decided(verified && view.group_nilpotent());
    if !verified {
        v = v.note("a reported triple fails the product formula");
    }
    vec![v]
}

/// For σ-soluble `G` with `F_σ(G)` a `σ_i`-group: `G` is a product of two
/// σ-nilpotent subgroups iff it has a σ-nilpotent Hall `σ_i'`-subgroup.
pub fn verify_theorem3(view: &SigmaView, id: ClassId) -> Verdict {
    let an = view.analysis;
    let lat = view.lattice();
    let n = an.group().order();
    let label = view.sigma.class_label(id);
    let v = Verdict::new("theorem3", CheckKind::Theorem, &an.name, Some(view.sigma))
        .witness("class", &label);
    if !view.group_soluble() {
        return v.not_applicable("G is not sigma-soluble");
    }
    let fitting = view.fitting();
    let v = v.witness("F_sigma", an.describe(fitting));
    let class_primes = view
        .sigma
        .class_primes_in(id, n)
        .expect("class of the signature");
    if !is_pi_number(lat.order(fitting), &class_primes) {
        return v.not_applicable(format!("F_sigma(G) is not a {label}-group"));
    }
    let complement: std::collections::BTreeSet<u64> =
        prime_set(n).difference(&class_primes).copied().collect();
    let hall_primary = hall_indices(lat, &class_primes);
    let hall_complement = hall_indices(lat, &complement);
    let nilpotent_complement = hall_complement.iter().copied().find(|&k| view.nilpotent[k]);
    let factorization = nilpotent_factorizations(view).into_iter().next();

    let has_hall = nilpotent_complement.is_some();
    let has_factorization = factorization.is_some();
    let mut v = v
        .witness("nilpotent_hall_complement", has_hall)
        .witness("nilpotent_factorization", has_factorization);
    let mut holds = has_hall == has_factorization;
    if let Some(k) = nilpotent_complement {
        // Exhibit G = HK with H a Hall σ_i-subgroup.
        match hall_primary.first() {
            Some(&h) => {
                let exhibited = factorizes(lat, h, k) && view.nilpotent[h];
                v = v
                    .witness("H", an.describe(h))
                    .witness("K", an.describe(k))
                    .witness("G_eq_HK", exhibited);
                holds &= exhibited;
            }
            None => {
                v = v.note(format!("no Hall {label}-subgroup"));
                holds = false;
            }
        }
    }
    if let Some(f) = factorization {
        v = v
            .witness("A", an.describe(f.a))
            .witness("B", an.describe(f.b));
    }
    v.decided(holds)
}
