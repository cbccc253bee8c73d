//! The acceptance battery as a single report.

use std::panic::{catch_unwind, AssertUnwindSafe};

use eadhm_core::constructions::{
    assemble_lift, lift_solve, quotient_adhm, random_adhm, random_commuting_pair, random_lift, sample_representations,
    sample_stable, vandermonde_rep, VandermondeParams, ENTRY_BOUND,
};
use eadhm_core::deformation::{
    build_cx, build_rho, check_les_consistency, check_rho1_surjective_on_cocycles, cohomology, expected_dimension,
};
use eadhm_core::exactmat::{rat, ratio, Subspace};
use eadhm_core::oracle::{oracle_is_stable, FpMatrix};
use eadhm_core::stability::{
    adhm_stable_over, chamber_of, is_adhm_stable, is_delta_stable, is_stable_in_chamber, make_param,
    verify_wall_witness, ChamberLocation, Wall,
};
use eadhm_core::{DimVector, EnhancedRep};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::report::{CheckResult, CheckStatus};

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub max_r: usize,
    pub max_c: usize,
    pub seed: u64,
    pub max_attempts: usize,
    pub deep: bool,
    pub parallel: bool,
}

impl SuiteConfig {
    pub fn inputs(&self) -> Value {
        json!({
            "max_r": self.max_r,
            "max_c": self.max_c,
            "seed": self.seed,
            "max_attempts": self.max_attempts,
            "deep": self.deep,
        })
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ salt)
    }
}

fn grid(max_r: usize, max_c: usize, max_cp: usize) -> Vec<DimVector> {
    let mut out = Vec::new();
    for r in 1..=max_r {
        for c in 1..=max_c {
            for cp in 1..=c.min(max_cp) {
                out.push(DimVector::new(r, c, cp).expect("positive dims"));
            }
        }
    }
    out
}

fn verdict(name: &str, bad: Vec<String>, ok: String) -> CheckResult {
    if bad.is_empty() {
        CheckResult::verdict(name, true, ok, Value::Null)
    } else {
        let summary = format!("{} failures", bad.len());
        CheckResult::verdict(name, false, summary, json!({"failures": bad}))
    }
}

fn corpus(cfg: &SuiteConfig) -> Vec<EnhancedRep> {
    let g = grid(cfg.max_r.min(3), cfg.max_c.min(5), 3);
    (0..100).map(|k| sample_representations(g[k % g.len()], cfg.seed.wrapping_add(k as u64), 1).remove(0)).collect()
}

fn stable_corpus(cfg: &SuiteConfig) -> Vec<EnhancedRep> {
    grid(cfg.max_r.min(2), cfg.max_c.min(4), 3)
        .into_iter()
        .enumerate()
        .flat_map(|(k, d)| sample_stable(d, cfg.seed.wrapping_add(100 + k as u64), 4))
        .collect()
}

fn complex_axioms(cfg: &SuiteConfig) -> CheckResult {
    let mut bad = Vec::new();
    let samples = corpus(cfg);
    for (k, x) in samples.iter().enumerate() {
        if let Err(e) = build_cx(x).and_then(|_| build_rho(x)) {
            bad.push(format!("#{k} {}: {e}", x.dims()));
        }
    }
    verdict("01_complex_axioms", bad, format!("{} representations, d·d = 0 and ρ a chain map", samples.len()))
}

fn expected_dimensions(_: &SuiteConfig) -> CheckResult {
    let mut bad = Vec::new();
    let dims = grid(4, 5, 5);
    for &d in &dims {
        let (r, c, cp) = (d.r as i64, d.c as i64, d.cprime as i64);
        let formula = if cp == 1 { 2 * r * c - r + 1 } else { r * (2 * c - cp) };
        match build_cx(&EnhancedRep::zero(d)) {
            Ok(cx) if -cx.euler() == formula && expected_dimension(d) == Ok(formula) => {}
            Ok(cx) => bad.push(format!("{d}: −χ = {}, formula {formula}", -cx.euler())),
            Err(e) => bad.push(format!("{d}: {e}")),
        }
    }
    verdict("02_expected_dimension", bad, format!("{} dimension vectors", dims.len()))
}

fn perfect_obstruction(cfg: &SuiteConfig) -> CheckResult {
    let mut bad = Vec::new();
    let stable = stable_corpus(cfg);
    for (k, x) in stable.iter().enumerate() {
        let h = cohomology(&build_cx(x).expect("valid representation")).h;
        if h[0] != 0 || h[3] != 0 {
            bad.push(format!("#{k} {}: h = {h:?}", x.dims()));
        }
    }
    if stable.is_empty() {
        bad.push("no stable samples".into());
    }
    verdict("03_perfect_obstruction", bad, format!("{} Δ-stable samples", stable.len()))
}

fn vandermonde_family(cfg: &SuiteConfig) -> Vec<(usize, usize, EnhancedRep)> {
    let mut out = Vec::new();
    for r in 1..=cfg.max_r.min(3) {
        for c in 1..=cfg.max_c.min(6) {
            let p = VandermondeParams::standard(r, c).expect("distinct nonzero eigenvalues");
            out.push((r, c, vandermonde_rep(&p).expect("valid parameters")));
        }
    }
    out
}

fn unobstructed_family(cfg: &SuiteConfig) -> CheckResult {
    let mut bad = Vec::new();
    let family = vandermonde_family(cfg);
    for (r, c, x) in &family {
        let want = vec![0, 2 * r * c - r + 1, 0, 0];
        let h = cohomology(&build_cx(x).expect("valid representation")).h;
        if is_delta_stable(x) != Ok(true) {
            bad.push(format!("({r},{c}) not stable"));
        }
        if h != want {
            bad.push(format!("({r},{c}): h = {h:?}, want {want:?}"));
        }
    }
    verdict("04_unobstructed_family", bad, format!("{} Vandermonde instances", family.len()))
}

fn rho1_surjective(cfg: &SuiteConfig) -> CheckResult {
    let mut bad = Vec::new();
    let family = vandermonde_family(cfg);
    for (r, c, x) in &family {
        if check_rho1_surjective_on_cocycles(x) != Ok(true) {
            bad.push(format!("({r},{c})"));
        }
    }
    verdict("05_rho1_surjective", bad, format!("{} Vandermonde instances", family.len()))
}

fn wall_witnesses(cfg: &SuiteConfig) -> CheckResult {
    let mut bad = Vec::new();
    let mut count = 0;
    for d in grid(cfg.max_r.min(2), cfg.max_c.min(4), 4) {
        for wall in [Wall::Minus, Wall::Plus] {
            count += 1;
            let rep = match verify_wall_witness(wall, d) {
                Ok(rep) => rep,
                Err(e) => {
                    bad.push(format!("{wall:?} {d}: {e}"));
                    continue;
                }
            };
            let expected = match wall {
                Wall::Minus => Subspace::zero(d.c),
                Wall::Plus => Subspace::coordinate(d.c, d.c - d.cprime..d.c),
            };
            let shape_ok =
                rep.destabilizer.as_ref().is_some_and(|w| !w.includes_w && w.s == expected && w.s_prime.is_full());
            if !rep.passed || !shape_ok || rep.slope != Some(rat(0)) {
                bad.push(format!("{wall:?} {d}"));
            }
        }
    }
    verdict("06_wall_witnesses", bad, format!("{count} witnesses, slope 0"))
}

fn quotient_fibration(cfg: &SuiteConfig) -> CheckResult {
    let mut bad = Vec::new();
    let stable = stable_corpus(cfg);
    for (k, x) in stable.iter().enumerate() {
        match quotient_adhm(x) {
            Ok(q) if q.satisfies_relation() && is_adhm_stable(&q) => {}
            Ok(_) => bad.push(format!("#{k} {}: quotient not a stable ADHM datum", x.dims())),
            Err(e) => bad.push(format!("#{k} {}: {e}", x.dims())),
        }
    }
    let mut rng = cfg.rng(7);
    let mut lifts = 0;
    for d in grid(cfg.max_r.min(2), cfg.max_c.min(4), 2) {
        for _ in 0..3 {
            let base = random_adhm(&mut rng, d.r, d.c - d.cprime);
            let (ap, bp) = random_commuting_pair(&mut rng, d.cprime);
            let ansatz = lift_solve(&base, &ap, &bp).expect("commuting pair").sample(&mut rng, ENTRY_BOUND);
            match assemble_lift(&ansatz) {
                Ok(x) if quotient_adhm(&x).ok() == Some(base) => {}
                _ => bad.push(format!("lift {d}: base not recovered")),
            }
            lifts += 1;
        }
    }
    verdict("07_quotient_fibration", bad, format!("{} stable samples, {lifts} lifts", stable.len()))
}

fn lifting_system(cfg: &SuiteConfig) -> CheckResult {
    let name = "08_lifting_system";
    let mut bad = Vec::new();
    let g = grid(cfg.max_r.min(2), cfg.max_c.min(4), 2);
    let mut rng = cfg.rng(8);
    for k in 0..50 {
        let d = g[k % g.len()];
        let base = random_adhm(&mut rng, d.r, d.c - d.cprime);
        let (ap, bp) = random_commuting_pair(&mut rng, d.cprime);
        let ansatz = lift_solve(&base, &ap, &bp).expect("commuting pair").sample(&mut rng, ENTRY_BOUND);
        if !assemble_lift(&ansatz).is_ok_and(|x| x.residuals().is_zero()) {
            bad.push(format!("sample #{k} {d}: nonzero residuals"));
        }
    }
    if !bad.is_empty() {
        return verdict(name, bad, String::new());
    }
    let mut found = serde_json::Map::new();
    let mut missing = Vec::new();
    for d in [(1, 3, 1), (1, 3, 2)].map(|(r, c, cp)| DimVector::new(r, c, cp).expect("positive dims")) {
        let mut rng = cfg.rng(80 + d.cprime as u64);
        match (0..cfg.max_attempts).find(|_| is_delta_stable(&random_lift(&mut rng, d)) == Ok(true)) {
            Some(k) => {
                found.insert(d.to_string(), json!(k + 1));
            }
            None => missing.push(d.to_string()),
        }
    }
    let details = json!({"attempts_to_stable": found, "missing": missing});
    if missing.is_empty() {
        CheckResult::new(name, CheckStatus::Pass, "50 solutions assemble; stable lifts found", details)
    } else {
        let summary = format!("no stable lift within {} attempts for {}", cfg.max_attempts, missing.join(", "));
        CheckResult::new(name, CheckStatus::Inconclusive, summary, details)
    }
}

fn les_consistency(cfg: &SuiteConfig) -> CheckResult {
    let mut bad = Vec::new();
    let mut samples = corpus(cfg);
    samples.truncate(40);
    samples.extend(stable_corpus(cfg));
    for (k, x) in samples.iter().enumerate() {
        match check_les_consistency(x, cfg.deep) {
            Ok(rep) if rep.passed() => {}
            Ok(rep) => bad.push(format!("#{k} {}: sum {}", x.dims(), rep.alternating_sum)),
            Err(e) => bad.push(format!("#{k} {}: {e}", x.dims())),
        }
    }
    let depth = if cfg.deep { "alternating sum and exactness at every node" } else { "alternating sum" };
    verdict("09_les_consistency", bad, format!("{} samples, {depth}", samples.len()))
}

fn oracle_instance<const P: u32>(rng: &mut ChaCha8Rng) -> Result<bool, String> {
    let c = rng.random_range(1..=3);
    let r = rng.random_range(1..=2);
    let mut draw = |m: usize, n: usize| {
        let v: Vec<i64> = (0..m * n).map(|_| rng.random_range(0..P as i64)).collect();
        FpMatrix::new(P, m, n, &v)
    };
    let (a, b, i) = (draw(c, c), draw(c, c), draw(c, r));
    let brute = oracle_is_stable(&a, &b, &i).map_err(|e| e.to_string())?;
    Ok(brute == adhm_stable_over(&a.to_field::<P>(), &b.to_field::<P>(), &i.to_field::<P>()))
}

fn oracle_equivalence(cfg: &SuiteConfig) -> CheckResult {
    let mut rng = cfg.rng(10);
    let mut bad = Vec::new();
    for k in 0..200 {
        let agree = if k % 2 == 0 { oracle_instance::<2>(&mut rng) } else { oracle_instance::<3>(&mut rng) };
        match agree {
            Ok(true) => {}
            Ok(false) => bad.push(format!("instance #{k} disagrees")),
            Err(e) => bad.push(format!("instance #{k}: {e}")),
        }
    }
    verdict("10_oracle_equivalence", bad, "200 instances over F₂ and F₃".into())
}

fn chamber_constancy(cfg: &SuiteConfig) -> CheckResult {
    let mut bad = Vec::new();
    let g = grid(cfg.max_r.min(2), cfg.max_c.min(4), 3);
    let mut rng = cfg.rng(11);
    for k in 0..20 {
        let d = g[k % g.len()];
        let x = if k % 2 == 0 {
            sample_representations(d, cfg.seed.wrapping_add(500 + k as u64), 1).remove(0)
        } else {
            random_lift(&mut rng, d)
        };
        let mut verdicts = Vec::new();
        for _ in 0..10 {
            let tp = ratio(rng.random_range(1..=30), rng.random_range(1..=7));
            let gap = ratio(rng.random_range(1..=30), rng.random_range(1..=7));
            let p = make_param(-&tp - gap, tp, d);
            if chamber_of(&p) != ChamberLocation::Delta {
                bad.push(format!("#{k}: sampled parameter left Δ"));
                continue;
            }
            verdicts.push(is_stable_in_chamber(&x, &p).map_err(|e| e.to_string()));
        }
        if verdicts.iter().any(|v| *v != verdicts[0]) {
            bad.push(format!("#{k} {d}: verdicts {verdicts:?}"));
        }
    }
    verdict("11_chamber_constancy", bad, "20 representations × 10 parameters".into())
}

type Check = fn(&SuiteConfig) -> CheckResult;

const CHECKS: [(&str, Check); 11] = [
    ("01_complex_axioms", complex_axioms),
    ("02_expected_dimension", expected_dimensions),
    ("03_perfect_obstruction", perfect_obstruction),
    ("04_unobstructed_family", unobstructed_family),
    ("05_rho1_surjective", rho1_surjective),
    ("06_wall_witnesses", wall_witnesses),
    ("07_quotient_fibration", quotient_fibration),
    ("08_lifting_system", lifting_system),
    ("09_les_consistency", les_consistency),
    ("10_oracle_equivalence", oracle_equivalence),
    ("11_chamber_constancy", chamber_constancy),
];

fn run_one(name: &str, check: Check, cfg: &SuiteConfig) -> CheckResult {
    catch_unwind(AssertUnwindSafe(|| check(cfg)))
        .unwrap_or_else(|_| CheckResult::new(name, CheckStatus::Fail, "check panicked", Value::Null))
}

/// Runs every check; results are ordered by name regardless of scheduling.
pub fn run_suite(cfg: &SuiteConfig) -> Vec<CheckResult> {
    let mut results: Vec<CheckResult> = if cfg.parallel {
        std::thread::scope(|s| {
            let handles: Vec<_> =
                CHECKS.iter().map(|&(name, check)| s.spawn(move || run_one(name, check, cfg))).collect();
            handles.into_iter().map(|h| h.join().expect("checks catch their own panics")).collect()
        })
    } else {
        CHECKS.iter().map(|&(name, check)| run_one(name, check, cfg)).collect()
    };
    results.sort_by(|a, b| a.name.cmp(&b.name));
    results
}
