//! One PASS/FAIL line per acceptance criterion.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nodal::arith::FieldElement;
use nodal::catalog::{catalog_build, Tag};
use nodal::ideal::{local_multiplicity, Budget, Ideal};
use nodal::parse::{parse_poly, ParseContext};
use nodal::projective::ProjPoint;
use nodal::report::{Status, VerificationReport};
use nodal::singular::{certify_singular_locus, classify_singularity, dual_degree_budget, SingularityReport};
use nodal::verify;

/// Claims known to fail, each with the reason it cannot pass.
const KNOWN_FAILURES: [(&str, &str); 1] = [(
    "J5b.nodes",
    "with a = w, the value where Alt5 acts, the five singular points have Hessian rank 3 (type A2, mu = 2); \
     the opposite sign -w gives nodes but only Dih10 symmetry",
)];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn failing_ids(rep: &VerificationReport) -> Vec<String> {
    rep.failures().iter().map(|c| c.id.clone()).collect()
}

fn known(id: &str) -> Option<&'static str> {
    KNOWN_FAILURES.iter().find(|(k, _)| *k == id).map(|(_, r)| *r)
}

fn criterion_table(table: &VerificationReport, elapsed: Duration) -> Outcome {
    let expected = [
        (Tag::J15, 10, 720, "Sym6"),
        (Tag::J14, 9, 72, "Sym3^2:C2"),
        (Tag::J9a, 6, 120, "Sym5"),
        (Tag::J9b, 6, 72, "Sym3^2:C2"),
        (Tag::J5a, 5, 120, "Sym5"),
        (Tag::J5b, 5, 60, "Alt5"),
    ];
    let mut bad = Vec::new();
    for (tag, s, order, name) in expected {
        let e = catalog_build(tag).expected.unwrap();
        if e.s != s || e.aut_order != order || e.fingerprint != name {
            bad.push(format!("{tag}: catalog expectations differ"));
        }
        for id in ["singular-locus", "nodes", "aut-order", "aut-fingerprint", "aut-preserves"] {
            let full = format!("{tag}.{id}");
            match table.get(&full) {
                Some(c) if c.status == Status::Pass => {}
                Some(_) => bad.push(match known(&full) {
                    Some(r) => format!("{full} ({r})"),
                    None => full,
                }),
                None => bad.push(format!("{full} missing")),
            }
        }
    }
    if elapsed > Duration::from_secs(300) {
        bad.push(format!("runtime {elapsed:?} exceeds 5 minutes"));
    }
    outcome(bad.is_empty(), if bad.is_empty() { format!("six rows reproduced in {elapsed:.1?}") } else { bad.join("; ") })
}

fn criterion_battery(table: &VerificationReport, exclusions: &VerificationReport) -> Outcome {
    let listed: usize = Tag::ROWS.iter().map(|&t| catalog_build(t).minimal_groups.len()).sum();
    let conditions = ["no-fixed-node", "orbits-at-least-4", "no-invariant-line", "no-invariant-plane"];
    let group_claims: Vec<_> = table
        .claims
        .iter()
        .filter(|c| c.id.contains(".group.") && conditions.iter().any(|k| c.id.ends_with(k)))
        .collect();
    let bad: Vec<String> = group_claims
        .iter()
        .filter(|c| c.status != Status::Pass)
        .map(|c| c.id.clone())
        .chain(failing_ids(exclusions))
        .collect();
    outcome(
        bad.is_empty() && group_claims.len() == 4 * listed && exclusions.claims.len() == 7,
        if bad.is_empty() {
            format!("{} condition checks on minimal groups, {} excluded groups refuted", group_claims.len(), exclusions.claims.len())
        } else {
            bad.join(", ")
        },
    )
}

fn criterion_pr1(rep: &VerificationReport) -> Outcome {
    let slow: Vec<String> = rep
        .claims
        .iter()
        .filter(|c| c.elapsed_ms.unwrap_or(0) > 10_000)
        .map(|c| c.id.clone())
        .collect();
    let equivalences = verify::pr1_cases()
        .iter()
        .filter(|c| rep.get(&format!("pr1.{}", c.id)).is_some_and(|r| r.status == Status::Pass))
        .count();
    let mutants = rep.claims.iter().filter(|c| c.id.ends_with(".mutant") && c.status == Status::Pass).count();
    let bad = failing_ids(rep);
    outcome(
        bad.is_empty() && slow.is_empty() && mutants == 7 && equivalences == 7,
        if bad.is_empty() && slow.is_empty() {
            format!("seven equivalences verified, seven mutants rejected, {} claims", rep.claims.len())
        } else {
            format!("failing {bad:?}, slow {slow:?}")
        },
    )
}

fn criterion_eliminations(rep: &VerificationReport, elapsed: Duration) -> Outcome {
    let bad = failing_ids(rep);
    outcome(
        bad.is_empty() && elapsed <= Duration::from_secs(30),
        if bad.is_empty() { format!("{} claims in {elapsed:.1?}", rep.claims.len()) } else { bad.join(", ") },
    )
}

fn random_rational(rng: &mut ChaCha8Rng) -> FieldElement {
    FieldElement::frac(rng.gen_range(-1000..=1000), rng.gen_range(1..=97))
}

fn criterion_j5a_oracle(budget: &Budget) -> Outcome {
    let e = catalog_build(Tag::J5a);
    let f = e.cubic().unwrap();
    let cert = match certify_singular_locus("J5a", f, &e.seed_points, budget) {
        Ok(c) => c,
        Err(err) => return outcome(false, err.to_string()),
    };
    let grad = f.gradient();
    let singular = |p: &[FieldElement]| grad.iter().all(|g| g.evaluate(p).is_zero());
    let coords_singular = e.seed_points.iter().all(|p| singular(p.coords()));
    let mut rng = ChaCha8Rng::seed_from_u64(common::SEED);
    let mut hits = 0;
    for _ in 0..10_000 {
        let v: Vec<FieldElement> = (0..5).map(|_| random_rational(&mut rng)).collect();
        if v.iter().all(FieldElement::is_zero) {
            continue;
        }
        let p = ProjPoint::new(v).unwrap();
        if singular(p.coords()) && !e.seed_points.contains(&p) {
            hits += 1;
        }
    }
    let pass = cert.jacobian_dimension == 0 && cert.completeness && cert.soundness && coords_singular && hits == 0;
    outcome(
        pass,
        format!(
            "Jacobian dimension {}, degree {:?}, radical certificate {}, coordinate points singular {}, stray singular samples {}",
            cert.jacobian_dimension, cert.jacobian_degree, cert.completeness, coords_singular, hits
        ),
    )
}

fn criterion_singularity_oracles(budget: &Budget) -> Outcome {
    let ctx = ParseContext::coords(4, 1);
    let mu = |text: &str| {
        let h = parse_poly(text, &ctx).unwrap();
        local_multiplicity(&Ideal::new(h.gradient()), &[FieldElement::zero(), FieldElement::zero(), FieldElement::zero(), FieldElement::zero()], budget)
    };
    let a1 = mu("x0^2 + x1^2 + x2^2 + x3^2");
    let a2 = mu("x0^2 + x1^2 + x2^2 + x3^3");
    let mut budgets = Vec::new();
    let mut segre = None;
    for tag in Tag::ROWS {
        let e = catalog_build(tag);
        let f = e.cubic().unwrap();
        let reports: Result<Vec<SingularityReport>, _> =
            e.seed_points.iter().map(|p| classify_singularity(f, p, budget)).collect();
        match reports {
            Ok(r) => {
                let b = dual_degree_budget(&r);
                if tag == Tag::J15 {
                    segre = Some(b.value);
                }
                budgets.push((tag, b.value, b.feasible));
            }
            Err(err) => return outcome(false, format!("{tag}: {err}")),
        }
    }
    let all_feasible = budgets.iter().all(|&(_, v, ok)| ok && v >= 3);
    outcome(
        a1 == Ok(1) && a2 == Ok(2) && segre == Some(4) && all_feasible,
        format!(
            "mu(A1) = {:?}, mu(x^2+y^2+z^2+t^3) = {:?}, Segre budget {:?}, budgets {}",
            a1,
            a2,
            segre,
            budgets.iter().map(|(t, v, _)| format!("{t}={v}")).collect::<Vec<_>>().join(" ")
        ),
    )
}

fn criterion_properties() -> Outcome {
    let mut bad = Vec::new();
    for (name, suite) in common::PROPERTY_SUITES {
        if let Err(e) = suite(common::CASES) {
            bad.push(format!("{name}: {e}"));
        }
    }
    // bases emitted by a full symbolic suite are audited too
    let (_, count, ok) = common::audited(|| verify::verify_pr1(&Budget::default()));
    if !ok {
        bad.push("a basis emitted by the six-node suite has an unreduced S-pair".into());
    }
    outcome(
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} suites x {} cases (seed {:#x}), {count} audited bases from the six-node suite", common::PROPERTY_SUITES.len(), common::CASES, common::SEED)
        } else {
            bad.join("; ")
        },
    )
}

fn main() -> ExitCode {
    let budget = Budget::default();

    let t = Instant::now();
    let table = verify::verify_table(&budget);
    let table_time = t.elapsed();
    let exclusions = verify::verify_exclusions(&budget);
    let pr1 = verify::verify_pr1(&budget);
    let t = Instant::now();
    let elim = verify::verify_eliminations(&budget);
    let elim_time = t.elapsed();

    let results = [
        ("table reproduction", criterion_table(&table, table_time)),
        ("minimal-subgroup battery", criterion_battery(&table, &exclusions)),
        ("six-node invariance conditions", criterion_pr1(&pr1)),
        ("elimination suites", criterion_eliminations(&elim, elim_time)),
        ("ideal-engine oracle on J5a", criterion_j5a_oracle(&budget)),
        ("singularity oracles", criterion_singularity_oracles(&budget)),
        ("property suites", criterion_properties()),
    ];

    let mut unexpected = false;
    for (i, (name, o)) in results.iter().enumerate() {
        println!("{} criterion {}: {name}: {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.detail);
        if !o.pass {
            let only_known = i == 0 && failing_ids(&table).iter().all(|id| known(id).is_some());
            unexpected |= !only_known;
        }
    }
    if unexpected {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
