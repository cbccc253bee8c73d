use std::fs;
use std::path::Path;

use eadhm_core::constructions::{
    assemble_lift, lift_solve, quotient_adhm, rng_from_seed, sample_representations, sample_stable, search_obstructed,
    vandermonde_rep, write_corpus, CorpusHeader, VandermondeParams, ENTRY_BOUND,
};
use eadhm_core::deformation::{
    build_cx, check_h0rho_injective, check_les_consistency, check_perfect_obstruction,
    check_rho1_surjective_on_cocycles, cohomology, expected_dimension,
};
use eadhm_core::exactmat::{format_rational, matrix_from_json, matrix_to_json, parse_rational, RatMatrix};
use eadhm_core::stability::{
    chamber_destabilizer, chamber_of, chamber_verdict, is_delta_stable, make_param, verify_wall_witness,
    ChamberLocation, Wall,
};
use eadhm_core::{AdhmRep, DimVector, EnhancedRep};
use serde_json::{json, Value};

use crate::report::{CheckResult, CheckStatus, InputError};

pub type Outcome = Result<(Value, Vec<CheckResult>), InputError>;

fn read_json(path: &Path) -> Result<Value, InputError> {
    let text = fs::read_to_string(path)
        .map_err(|e| InputError::new("io_error", format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| InputError::new("invalid_json", format!("{}: {e}", path.display())))
}

pub fn read_rep(path: &Path) -> Result<EnhancedRep, InputError> {
    Ok(EnhancedRep::from_json_value(&read_json(path)?)?)
}

pub fn dims(r: usize, c: usize, cprime: usize) -> Result<DimVector, InputError> {
    Ok(DimVector::new(r, c, cprime)?)
}

fn relation_checks(x: &EnhancedRep) -> Vec<CheckResult> {
    let res = x.residuals();
    res.named()
        .into_iter()
        .map(|(name, m)| {
            let ok = m.is_zero();
            let summary = if ok {
                "residual is zero".to_string()
            } else {
                format!("nonzero residual {}×{}", m.rows(), m.cols())
            };
            CheckResult::verdict(name, ok, summary, json!({"residual": matrix_to_json(m)}))
        })
        .collect()
}

pub fn check(path: &Path) -> Outcome {
    let x = read_rep(path)?;
    let inputs = json!({"file": path.display().to_string(), "dims": x.dims()});
    let mut results = vec![CheckResult::verdict("shapes", true, format!("dims {}", x.dims()), json!(x.dims()))];
    results.extend(relation_checks(&x));
    Ok((inputs, results))
}

pub fn stability(path: &Path, theta: &str, theta_prime: &str) -> Outcome {
    let x = read_rep(path)?;
    let p = make_param(parse_rational(theta)?, parse_rational(theta_prime)?, x.dims());
    let chamber = chamber_of(&p);
    let inputs = json!({"file": path.display().to_string(), "dims": x.dims(), "param": p.to_json_value()});
    if chamber != ChamberLocation::Delta {
        return Err(InputError::new(
            "outside_chamber",
            format!("criterion only valid in chamber Δ; parameter lies in {chamber:?}"),
        ));
    }
    let v = chamber_verdict(&x, &p)?;
    let mut details = serde_json::to_value(&v).expect("serializable");
    details["chamber"] = json!(chamber);
    if let Some(w) = chamber_destabilizer(&x)? {
        details["destabilizer"] = w.to_json_value();
    }
    let summary = format!(
        "{} (rank F = {} of {}, closure of im I has dim {} of {})",
        if v.stable { "stable" } else { "unstable" },
        v.f_rank,
        x.dims().cprime,
        v.closure_dim,
        x.dims().c
    );
    Ok((inputs, vec![CheckResult::verdict("stability", v.stable, summary, details)]))
}

pub fn cohomology_cmd(path: &Path, deep: bool) -> Outcome {
    let x = read_rep(path)?;
    let d = x.dims();
    let inputs = json!({"file": path.display().to_string(), "dims": d, "deep": deep});
    let cx = build_cx(&x)?;
    let rep = cohomology(&cx);
    let expected = expected_dimension(d)?;
    let mut results = vec![
        CheckResult::verdict(
            "cohomology",
            true,
            format!("h = {:?}, degree dims {:?}", rep.h, cx.degree_dims()),
            rep.to_json_value(Some(expected)),
        ),
        CheckResult::verdict(
            "euler",
            -rep.euler == expected,
            format!("−χ = {}, expected dimension {expected}", -rep.euler),
            json!({"euler": rep.euler, "expected_dimension": expected}),
        ),
    ];
    results.push(match check_perfect_obstruction(&x) {
        Ok(ob) => CheckResult::verdict(
            "perfect_obstruction",
            ob.passed,
            format!("h0 = {}, h3 = {}, h2 = {}", rep.h_at(0), rep.h_at(3), rep.h_at(2)),
            ob.to_json_value(),
        ),
        Err(e) => CheckResult::new("perfect_obstruction", CheckStatus::Skipped, e.to_string(), Value::Null),
    });
    let les = check_les_consistency(&x, deep)?;
    results.push(CheckResult::verdict(
        "long_exact_sequence",
        les.passed(),
        format!("alternating sum {}{}", les.alternating_sum, if deep { ", deep exactness checked" } else { "" }),
        les.to_json_value(),
    ));
    if x.f().rank() == d.cprime {
        results.push(CheckResult::verdict(
            "h0_rho_injective",
            check_h0rho_injective(&x),
            "H⁰(C(X'')) → H⁰(C(X',X''))",
            Value::Null,
        ));
    }
    Ok((inputs, results))
}

pub fn walls(d: DimVector) -> Outcome {
    let inputs = json!({"dims": d});
    let mut results = Vec::new();
    for wall in [Wall::Minus, Wall::Plus] {
        let rep = verify_wall_witness(wall, d)?;
        let slope = rep.slope.as_ref().map(format_rational).unwrap_or_else(|| "none".into());
        let name = match wall {
            Wall::Minus => "wall_minus",
            Wall::Plus => "wall_plus",
        };
        results.push(CheckResult::verdict(
            name,
            rep.passed,
            format!("{}, destabilizer slope {slope}", rep.verdict()),
            rep.to_json_value(),
        ));
    }
    Ok((inputs, results))
}

fn read_matrix(path: &Path, what: &str) -> Result<RatMatrix, InputError> {
    Ok(matrix_from_json(&read_json(path)?, what)?)
}

pub fn lift(base: &Path, aprime: &Path, bprime: &Path, samples: usize, seed: u64) -> Outcome {
    let base_rep = AdhmRep::from_json_value(&read_json(base)?)?;
    let a_prime = read_matrix(aprime, "Aprime")?;
    let b_prime = read_matrix(bprime, "Bprime")?;
    let inputs = json!({
        "base": base.display().to_string(),
        "Aprime": aprime.display().to_string(),
        "Bprime": bprime.display().to_string(),
        "samples": samples,
        "seed": seed,
    });
    if !base_rep.satisfies_relation() {
        return Err(InputError::new("not_a_representation", "base does not satisfy [A,B] + IJ = 0"));
    }
    let sol = lift_solve(&base_rep, &a_prime, &b_prime)?;
    let mut results = vec![CheckResult::verdict(
        "system",
        true,
        format!(
            "{} unknowns, {} equations, rank {}, solution space dim {}",
            sol.unknowns(),
            sol.equations(),
            sol.rank(),
            sol.solution_dim()
        ),
        json!({
            "unknowns": sol.unknowns(),
            "equations": sol.equations(),
            "rank": sol.rank(),
            "solution_dim": sol.solution_dim(),
        }),
    )];
    let mut rng = rng_from_seed(seed);
    let (mut relations_ok, mut section_ok, mut stable) = (0, 0, 0);
    let mut first_stable = Value::Null;
    for _ in 0..samples {
        let x = assemble_lift(&sol.sample(&mut rng, ENTRY_BOUND))?;
        if x.residuals().is_zero() {
            relations_ok += 1;
        }
        if quotient_adhm(&x).ok().as_ref() == Some(&base_rep) {
            section_ok += 1;
        }
        if is_delta_stable(&x).unwrap_or(false) {
            stable += 1;
            if first_stable.is_null() {
                first_stable = x.to_json_value();
            }
        }
    }
    results.push(CheckResult::verdict(
        "relations",
        relations_ok == samples,
        format!("{relations_ok}/{samples} assembled lifts satisfy the relations"),
        Value::Null,
    ));
    results.push(CheckResult::verdict(
        "quotient_recovers_base",
        section_ok == samples,
        format!("{section_ok}/{samples}"),
        Value::Null,
    ));
    let status = if stable > 0 { CheckStatus::Pass } else { CheckStatus::Inconclusive };
    results.push(CheckResult::new(
        "stable_lifts",
        status,
        format!("{stable}/{samples} lifts are Δ-stable"),
        json!({"count": stable, "example": first_stable}),
    ));
    Ok((inputs, results))
}

pub fn vandermonde(r: usize, c: usize, lambdas: &str) -> Outcome {
    let values = lambdas.split(',').map(|s| parse_rational(s.trim())).collect::<Result<Vec<_>, _>>()?;
    if values.len() != c {
        return Err(InputError::new("invalid_dims", format!("expected {c} eigenvalues, got {}", values.len())));
    }
    let p = VandermondeParams::new(r, values)?;
    let x = vandermonde_rep(&p)?;
    let inputs = json!({"r": r, "c": c, "lambdas": p.lambdas().iter().map(format_rational).collect::<Vec<_>>()});
    let rep = cohomology(&build_cx(&x)?);
    let expected = expected_dimension(x.dims())?;
    let want = vec![0, expected as usize, 0, 0];
    let mut results = relation_checks(&x);
    results.push(CheckResult::verdict("stable", is_delta_stable(&x)?, "Δ-stable", Value::Null));
    results.push(CheckResult::verdict(
        "unobstructed",
        rep.h == want,
        format!("h = {:?}, expected {:?}", rep.h, want),
        rep.to_json_value(Some(expected)),
    ));
    results.push(CheckResult::verdict(
        "rho1_surjective_on_cocycles",
        check_rho1_surjective_on_cocycles(&x)?,
        "every cocycle of C(X',X'') lifts to a cocycle",
        Value::Null,
    ));
    Ok((inputs, results))
}

pub fn search(d: DimVector, attempts: usize, seed: u64) -> Outcome {
    let inputs = json!({"dims": d, "max_attempts": attempts, "seed": seed});
    let result = match search_obstructed(d, seed, attempts) {
        Some(found) => CheckResult::new(
            "search_obstructed",
            CheckStatus::Pass,
            format!("found h = {:?} at attempt {}", found.cohomology.h, found.attempt),
            json!({
                "found": found.rep.to_json_value(),
                "cohomology": found.cohomology.to_json_value(expected_dimension(d).ok()),
                "attempt": found.attempt,
            }),
        ),
        None => CheckResult::new(
            "search_obstructed",
            CheckStatus::Inconclusive,
            format!("no obstructed Δ-stable point within {attempts} attempts"),
            json!({"found": null}),
        ),
    };
    Ok((inputs, vec![result]))
}

/// JSON-lines corpus; returns the corpus text and the number of entries.
pub fn sample_corpus(d: DimVector, count: usize, seed: u64, stable: bool) -> (String, usize) {
    let (generator, reps) = if stable {
        ("sample_stable", sample_stable(d, seed, count))
    } else {
        ("sample_representations", sample_representations(d, seed, count))
    };
    let header = CorpusHeader::new(generator, d, seed, reps.len());
    let mut buf = Vec::new();
    write_corpus(&mut buf, &header, &reps).expect("writing to memory");
    (String::from_utf8(buf).expect("JSON is UTF-8"), reps.len())
}
