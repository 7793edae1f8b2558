use std::fmt::Write as _;

use sigmafact_core::hall::{complete_hall_sigma_set, satisfies_d_class, CompleteHallSet};
use sigmafact_core::lattice::{centralizer_of_chief_factor, chief_series};
use sigmafact_core::sigma::{
    is_sigma_central, is_sigma_nilpotent, is_sigma_soluble, prime_set, sigma_fitting, sigma_of,
    sigma_radical,
};
use sigmafact_core::{Group, Result, SigmaPartition, SubgroupLattice};

fn set_text(ps: impl IntoIterator<Item = u64>) -> String {
    let ps: Vec<String> = ps.into_iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", ps.join(","))
}

pub fn render(name: &str, g: &Group, sigma: &SigmaPartition, lattice_limit: u64) -> Result<String> {
    let mut out = String::new();
    let n = g.order();
    let signature = sigma_of(n, sigma)?;
    let labels: Vec<String> = signature.iter().map(|id| sigma.class_label(id)).collect();
    let _ = writeln!(out, "group: {name} {}", g.describe());
    let _ = writeln!(out, "order: {n}");
    let _ = writeln!(out, "primes: {}", set_text(prime_set(n)));
    let _ = writeln!(out, "partition: {sigma}");
    let _ = writeln!(out, "sigma(G): {}", labels.join(" "));

    if g.is_trivial() {
        let _ = writeln!(out, "chief series: (trivial group)");
    } else {
        let _ = writeln!(out, "chief series:");
        for f in chief_series(g)? {
            let c = centralizer_of_chief_factor(g, &f)?;
            let _ = writeln!(
                out,
                "  {} < {}  |H/K| = {}, |G:C| = {}, sigma-central: {}",
                f.below.order(),
                f.above.order(),
                f.factor_order(),
                n / c.order(),
                is_sigma_central(g, &f, sigma)?
            );
        }
    }
    let _ = writeln!(out, "sigma-nilpotent: {}", is_sigma_nilpotent(g, sigma)?);
    let _ = writeln!(out, "sigma-soluble: {}", is_sigma_soluble(g, sigma)?);
    let _ = writeln!(out, "F_sigma: {}", sigma_fitting(g, sigma)?.describe());
    let _ = writeln!(out, "R_sigma: {}", sigma_radical(g, sigma)?.describe());

    let lattice = SubgroupLattice::enumerate_within(g, lattice_limit)?;
    let _ = writeln!(
        out,
        "subgroups: {} in {} conjugacy classes, {} normal",
        lattice.len(),
        lattice.classes().len(),
        lattice.normal_indices().len()
    );
    match complete_hall_sigma_set(&lattice, sigma)? {
        CompleteHallSet::Found(members) => {
            let _ = writeln!(out, "complete Hall sigma-set:");
            for (id, i) in members {
                let _ = writeln!(
                    out,
                    "  {}: {}",
                    sigma.class_label(id),
                    lattice.subgroup(i).describe()
                );
            }
        }
        CompleteHallSet::Missing(id) => {
            let _ = writeln!(
                out,
                "complete Hall sigma-set: none (no Hall {}-subgroup)",
                sigma.class_label(id)
            );
        }
    }
    for id in signature.iter() {
        let _ = writeln!(
            out,
            "D_{}: {}",
            sigma.class_label(id),
            satisfies_d_class(&lattice, sigma, id)?
        );
    }
    Ok(out)
}
