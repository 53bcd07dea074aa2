//! Acceptance criteria, all exact. Prints one line per criterion and exits
//! with a failure status if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use greenfn::cli::run;
use greenfn::dl_calculus::GreenData;
use greenfn::exact_algebra::{partition_enumerate, IntPoly, Partition};
use greenfn::group_data::{
    gl_order, torus_order, unipotent_centralizer_order, unipotent_class_size, FiniteGroup,
    FiniteGroupWithAutomorphism,
};
use greenfn::stack_points::FiniteActionWithFrobenius;
use greenfn::symmetric_functions::{green_column_via_hall_littlewood, green_table};
use num_bigint::BigInt;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn all_n<F>(max: usize, mut check: F) -> Outcome
where
    F: FnMut(&GreenData<greenfn::exact_algebra::RatFunc>) -> Result<(bool, usize), String>,
{
    let mut pairs = 0;
    for n in 1..=max {
        let data = GreenData::symbolic(n, max).map_err(|e| e.to_string())?;
        let (ok, count) = check(&data)?;
        if !ok {
            return Err(format!("fails at n={n}"));
        }
        pairs += count;
    }
    Ok(format!("{pairs} exact entries, n <= {max}"))
}

fn first_orthogonality() -> Outcome {
    all_n(6, |d| {
        let r = d.verify_first_orthogonality().map_err(|e| e.to_string())?;
        Ok((r.passed(), r.checks.len()))
    })
}

fn second_orthogonality() -> Outcome {
    all_n(6, |d| {
        let r = d.verify_second_orthogonality().map_err(|e| e.to_string())?;
        Ok((r.passed(), r.checks.len()))
    })
}

fn adjunction() -> Outcome {
    all_n(6, |d| {
        let r = d.projector_check().map_err(|e| e.to_string())?;
        Ok((r.passed(), r.pair_count()))
    })
}

fn equivalence() -> Outcome {
    all_n(6, |d| {
        let r = d.transform_first_to_second().map_err(|e| e.to_string())?;
        Ok((r.passed(), r.pair_count()))
    })
}

fn oracle_equivalence() -> Outcome {
    let mut entries = 0;
    for n in 1..=5 {
        let table = green_table(n).map_err(|e| e.to_string())?;
        for (j, rho) in table.labels().iter().enumerate() {
            let column = green_column_via_hall_littlewood(rho).map_err(|e| e.to_string())?;
            for (i, q) in column.iter().enumerate() {
                if q != table.get(i, j) {
                    return Err(format!("Q^{}_{rho}: {} vs {q}", table.labels()[i], table.get(i, j)));
                }
                entries += 1;
            }
        }
    }
    Ok(format!("{entries} entries agree, n <= 5"))
}

fn brute_force_anchors() -> Outcome {
    let at = |p: &IntPoly, q: u64| p.eval_int(&BigInt::from(q));
    let mut checks = 0;
    let mut expect = |what: String, got: BigInt, want: u64| {
        checks += 1;
        if got == BigInt::from(want) {
            Ok(())
        } else {
            Err(format!("{what}: formula {got}, enumeration {want}"))
        }
    };
    for p in [2, 3] {
        for n in 1..=3 {
            expect(format!("|GL_{n}(F_{p})|"), at(&gl_order(n), p), common::gl_count(n, p))?;
            let unipotent = common::unipotent_type_counts(n, p);
            expect(
                format!("unipotent count n={n} p={p}"),
                BigInt::from(p).pow((n * (n - 1)) as u32),
                unipotent.values().sum(),
            )?;
            for mu in partition_enumerate(n) {
                let x = common::jordan_unipotent(mu.parts(), p);
                expect(format!("a_{mu}({p})"), at(&unipotent_centralizer_order(&mu), p), common::centralizer_count(&x))?;
                let size = unipotent_class_size(&mu).map_err(|e| e.to_string())?;
                expect(
                    format!("class size {mu} at {p}"),
                    at(&size, p),
                    unipotent.get(mu.parts()).copied().unwrap_or(0),
                )?;
            }
        }
    }
    // tori: centralizers of regular semisimple elements; split (1,1,1) needs
    // three distinct nonzero eigenvalues, first available over F_5
    let mut tori = BTreeSet::new();
    for p in [2, 3, 5] {
        for n in 1..=3 {
            for rho in partition_enumerate(n) {
                if tori.contains(&rho) {
                    continue;
                }
                if let Some(x) = common::regular_semisimple(rho.parts(), p) {
                    expect(format!("|T_{rho}|({p})"), at(&torus_order(&rho), p), common::centralizer_count(&x))?;
                    tori.insert(rho);
                }
            }
        }
    }
    if tori.len() != 6 {
        return Err(format!("only {} torus types realized", tori.len()));
    }
    let two = Partition::row(2);
    expect("|GL_2(F_2)|".into(), at(&gl_order(2), 2), 6)?;
    expect("a_(2)(2)".into(), at(&unipotent_centralizer_order(&two), 2), 2)?;
    expect("|T_(2)|(2)".into(), at(&torus_order(&two), 2), 3)?;
    Ok(format!("{checks} counts over F_2, F_3 (F_5 for the split torus of GL_3), n <= 3"))
}

fn builtin_groups() -> Vec<FiniteGroup> {
    let mut groups = Vec::new();
    for n in 1..=24 {
        groups.push(FiniteGroup::cyclic(n).unwrap());
    }
    for n in 1..=12 {
        groups.push(FiniteGroup::dihedral(n).unwrap());
    }
    for n in 1..=4 {
        groups.push(FiniteGroup::symmetric(n).unwrap());
    }
    groups
}

fn supported_automorphisms(g: &FiniteGroup) -> Vec<FiniteGroupWithAutomorphism> {
    let mut out = vec![FiniteGroupWithAutomorphism::identity(g.clone())];
    if let Ok(inv) = FiniteGroupWithAutomorphism::inversion(g.clone()) {
        out.push(inv);
    }
    for c in 0..g.order() {
        out.push(FiniteGroupWithAutomorphism::conjugation(g.clone(), c).unwrap());
    }
    if g.name().starts_with("cyclic:") {
        let n = g.order();
        for k in (1..n).filter(|&k| num_integer::gcd(k, n) == 1) {
            let images = (0..n).map(|x| x * k % n).collect();
            out.push(FiniteGroupWithAutomorphism::new(g.clone(), images, format!("times:{k}")).unwrap());
        }
    }
    let mut seen = BTreeSet::new();
    out.retain(|a| seen.insert(a.images().to_vec()));
    out
}

fn mass_formula() -> Outcome {
    let mut triples = 0;
    for g in builtin_groups() {
        for aut in supported_automorphisms(&g) {
            for action in [
                FiniteActionWithFrobenius::point(aut.clone()),
                FiniteActionWithFrobenius::self_translation(aut.clone()),
                FiniteActionWithFrobenius::self_conjugation(aut.clone()),
            ] {
                let d = action.decompose().map_err(|e| e.to_string())?;
                if d.groupoid_mass() != action.element_averaged_mass() || !d.class_equation_holds() {
                    return Err(format!("{} / {} / {}", g.name(), aut.description(), action.name()));
                }
                triples += 1;
            }
        }
    }
    if triples < 20 {
        return Err(format!("only {triples} triples"));
    }
    Ok(format!("{triples} (group, automorphism, action) triples, |H| <= 24"))
}

fn determinism() -> Outcome {
    let golden = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for (args, file) in [
        (["green-table", "--n", "3"].as_slice(), "green_table_n3.json"),
        (["orders", "--n", "3"].as_slice(), "orders_n3.json"),
        (["verify", "all", "--n", "3"].as_slice(), "verify_all_n3.json"),
    ] {
        let invoke = || run(std::iter::once("greenfn").chain(args.iter().copied()));
        let (a, b) = (invoke(), invoke());
        let stored = std::fs::read_to_string(golden.join(file)).map_err(|e| e.to_string())?;
        if a.code != 0 || a != b || a.stdout != stored {
            return Err(format!("{file} differs"));
        }
    }
    Ok("3 golden files byte-identical across two runs".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("first orthogonality", first_orthogonality),
        ("second orthogonality", second_orthogonality),
        ("adjunction R I = I R = P = 1", adjunction),
        ("first <-> second equivalence", equivalence),
        ("charge route = Hall-Littlewood route", oracle_equivalence),
        ("brute-force anchors", brute_force_anchors),
        ("stack-point mass formula", mass_formula),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail}; {secs:.2}s)", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({detail}; {secs:.2}s)", k + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
