//! Command-line verifier and classifier.
//!
//! Exit codes: 0 = all checks passed / classification produced, 1 = a
//! verification mismatch against a published value, 2 = malformed input.

use clap::{Parser, Subcommand};
use g2forms::cartan::{codim_sequence, graph_independence, polar_extension_report, Flag};
use g2forms::coframe::{verify_example2, verify_flat_model};
use g2forms::g2::{annihilator_algebra, invariant_dimensions, printed_phi_dual};
use g2forms::json::{
    classification_to_json, form_to_json, g2_bundle_to_json, plane_from_json, PlaneJson,
};
use g2forms::orbits::{classify_plane, local_model_check, orbit_invariant};
use g2forms::spin7::{
    classify_orbit_point, cone_consistency_check, nearly_parallel_residual, obstruction_value,
    orbit_sample, random_unit_point, OrbitPointClass, Spin7Data,
};
use g2forms::{G2Data, Metric, Rat, Scalar};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "g2forms", version, about = "Exact G2/Spin(7) structure toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a 3- or 4-plane of R^7 into its G2-orbit.
    Classify {
        /// Path to a plane JSON file {"dim":7,"vectors":[["p/q",…]],"oriented":bool}.
        #[arg(long)]
        input: String,
    },
    /// Compute the codimension sequence and extension-rank table.
    CartanTest,
    /// Run a verification suite.
    Verify {
        /// One of: g2, dual-form, local-model, cartan, torsion, spin7,
        /// obstruction, quadrics, all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Sample the homogeneous orbit and report residuals.
    HomogeneousOrbit {
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Start point as "x0,x1,x6" (placed at coordinates 0, 1, 6).
        #[arg(long)]
        point: Option<String>,
    },
}

fn tolerance() -> f64 {
    std::env::var("G2_TOL")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(1e-9)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let tol = tolerance();
    match cli.command {
        Command::Classify { input } => {
            let text = std::fs::read_to_string(&input).map_err(|e| format!("{input}: {e}"))?;
            let plane_json: PlaneJson =
                serde_json::from_str(&text).map_err(|e| format!("{input}: {e}"))?;
            let plane = plane_from_json(&plane_json, tol).map_err(|e| e.to_string())?;
            let g2 = G2Data::<Rat>::new();
            let s = orbit_invariant(&plane, &g2, tol).map_err(|e| e.to_string())?;
            let class = classify_plane(&plane, &g2, tol).map_err(|e| e.to_string())?;
            println!(
                "{}",
                serde_json::to_string_pretty(&classification_to_json(&class, &s)).unwrap()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::CartanTest => {
            let g2 = G2Data::<Rat>::new();
            let report =
                polar_extension_report(&Flag::standard(), &g2, tol).map_err(|e| e.to_string())?;
            let summary = json!({
                "c": report.c,
                "r4": report.r[4],
                "zdims": report.z_dims,
                "cartanSum": report.cartan_sum,
                "report": report,
            });
            println!("{}", serde_json::to_string_pretty(&summary).unwrap());
            let ok = report.c == [0, 0, 0, 1, 5, 15, 28, 35]
                && report.r[4] == 32
                && report.z_dims == [10, 21, 35]
                && report.involutive.iter().all(|&b| b);
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Verify { suite, seed } => {
            let mut results = serde_json::Map::new();
            let mut pass = true;
            let run_suite = |name: &str| suite == name || suite == "all";
            if run_suite("g2") {
                let (value, ok) = check_g2(tol);
                pass &= ok;
                results.insert("g2".into(), value);
            }
            if run_suite("dual-form") {
                let (value, ok) = check_dual_form();
                pass &= ok;
                results.insert("dualForm".into(), value);
            }
            if run_suite("local-model") {
                let (value, ok) = check_local_model();
                pass &= ok;
                results.insert("localModel".into(), value);
            }
            if run_suite("cartan") {
                let (value, ok) = check_cartan(tol, seed);
                pass &= ok;
                results.insert("cartan".into(), value);
            }
            if run_suite("torsion") {
                let (value, ok) = check_torsion();
                pass &= ok;
                results.insert("torsion".into(), value);
            }
            if run_suite("spin7") {
                let (value, ok) = check_spin7(tol, seed);
                pass &= ok;
                results.insert("spin7".into(), value);
            }
            if run_suite("obstruction") {
                let (value, ok) = check_obstruction(seed);
                pass &= ok;
                results.insert("obstruction".into(), value);
            }
            if run_suite("quadrics") {
                let (value, ok) = check_quadrics(seed);
                pass &= ok;
                results.insert("quadrics".into(), value);
            }
            if results.is_empty() {
                return Err(format!("unknown suite {suite:?}"));
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&serde_json::Value::Object(results)).unwrap()
            );
            Ok(if pass { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::HomogeneousOrbit {
            samples,
            seed,
            point,
        } => {
            let (x0, x1, x6) = match &point {
                None => (0.0, 1.0, 0.0),
                Some(text) => {
                    let parts: Vec<f64> = text
                        .split(',')
                        .map(|s| s.trim().parse().map_err(|e| format!("{s:?}: {e}")))
                        .collect::<Result<_, _>>()?;
                    if parts.len() != 3 {
                        return Err("--point needs exactly three coordinates".into());
                    }
                    (parts[0], parts[1], parts[2])
                }
            };
            let mut x = vec![0.0f64; 8];
            x[0] = x0;
            x[1] = x1;
            x[6] = x6;
            let class = classify_orbit_point(x0, x1, x6, tol).map_err(|e| e.to_string())?;
            let (numeric, closed) =
                obstruction_value(x0, x1, x6, tol).map_err(|e| e.to_string())?;
            let report = orbit_sample(&x, samples, seed).map_err(|e| e.to_string())?;
            let branch = match &class {
                OrbitPointClass::PhiOrbit { branches } => branches.join(","),
                OrbitPointClass::Generic { .. } => "generic".to_string(),
            };
            let out = json!({
                "point": [x0, x1, x6],
                "obstruction": {"numeric": numeric, "closedForm": closed},
                "branch": branch,
                "maxResiduals": {
                    "sphere": report.max_sphere_residual,
                    "quadrics": report.max_quadric_residuals,
                    "linear": report.max_linear_residuals,
                },
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn check_g2(tol: f64) -> (serde_json::Value, bool) {
    let g2 = G2Data::<Rat>::new();
    let dim = g2.algebra.len();
    let inv = invariant_dimensions(&g2.algebra, 7, tol);
    let expected_inv = vec![1usize, 0, 0, 1, 1, 0, 0, 1];
    let ok = dim == 14 && inv == expected_inv;
    (
        json!({
            "algebraDim": dim,
            "invariantDims": inv,
            "bundle": g2_bundle_to_json(&g2),
            "pass": ok,
        }),
        ok,
    )
}

fn check_dual_form() -> (serde_json::Value, bool) {
    let g2 = G2Data::<Rat>::new();
    let printed = printed_phi_dual::<Rat>();
    let matches = printed == g2.phi_dual;
    // The computed dual must carry +dr0∧dx1∧dx2∧dx3 and be annihilated by
    // the algebra; the printed Remark is expected NOT to match (duplicated
    // dr^{12} slot) and is reported for comparison.
    let anchored = g2.phi_dual.coeff_on(&[3, 0, 1, 2]) == Rat::from_int(1)
        && g2
            .algebra
            .iter()
            .all(|a| g2.phi_dual.lie_act(a).unwrap().is_zero());
    (
        json!({
            "computed": form_to_json(&g2.phi_dual),
            "printed": form_to_json(&printed),
            "printedMatchesComputed": matches,
            "computedAnchorsHold": anchored,
            "pass": anchored,
        }),
        anchored,
    )
}

fn check_local_model() -> (serde_json::Value, bool) {
    let report = local_model_check(&G2Data::<Rat>::new()).unwrap();
    let ok = report.iso_ok;
    (
        json!({
            "matrixRank": report.matrix_rank,
            "failedGenerators": report.failed_generators,
            "pass": ok,
        }),
        ok,
    )
}

fn check_cartan(tol: f64, seed: u64) -> (serde_json::Value, bool) {
    let g2 = G2Data::<Rat>::new();
    let flag = Flag::standard();
    let report = match polar_extension_report(&flag, &g2, tol) {
        Ok(r) => r,
        Err(e) => return (json!({"error": e.to_string(), "pass": false}), false),
    };
    let (rebased_c, _) = codim_sequence(&flag.rebased(seed.wrapping_add(1)), &g2, tol).unwrap();
    let graphs_ok = graph_independence(&flag, &g2, seed, tol).unwrap();
    let ok = report.c == [0, 0, 0, 1, 5, 15, 28, 35]
        && rebased_c == report.c
        && report.r[4] == 32
        && report.z_dims == [10, 21, 35]
        && report.involutive.iter().all(|&b| b)
        && report.cartan_sum == 49
        && report.fiber_count_ok
        && report.chain_ok
        && report.g2_contained
        && report.ad_t_invariant[4..].iter().all(|&b| b)
        && graphs_ok;
    (
        json!({"report": report, "rebasedC": rebased_c, "graphIndependence": graphs_ok, "pass": ok}),
        ok,
    )
}

fn check_torsion() -> (serde_json::Value, bool) {
    let flat = verify_flat_model().unwrap();
    let ex2 = match verify_example2() {
        Ok(r) => r,
        Err(e) => return (json!({"error": e.to_string(), "pass": false}), false),
    };
    let ok = flat.closed
        && flat.coclosed
        && flat.stable_positive
        && flat.involution_invariant
        && ex2.residual_max == 0.0
        && ex2.four_form_closed
        && ex2.chi_dual_matches
        && ex2.involution_invariant;
    (json!({"flatModel": flat, "example2": ex2, "pass": ok}), ok)
}

fn check_spin7(tol: f64, seed: u64) -> (serde_json::Value, bool) {
    let data = match Spin7Data::<Rat>::new() {
        Ok(d) => d,
        Err(e) => return (json!({"error": e.to_string(), "pass": false}), false),
    };
    let algebra_dim = annihilator_algebra(&data.phi0, 0.0).len();
    let self_dual = Metric::<Rat>::standard(8).star(&data.phi0).unwrap() == data.phi0;
    let fdata = Spin7Data::<f64>::new().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_cone = 0.0f64;
    for _ in 0..20 {
        let x = random_unit_point(&mut rng);
        max_cone = max_cone.max(cone_consistency_check(&x, &fdata).unwrap());
    }
    let mut max_np = 0.0f64;
    for _ in 0..5 {
        let mut p = [0.0f64; 7];
        for c in p.iter_mut() {
            *c = random_unit_point(&mut rng)[0] * 0.8;
        }
        max_np = max_np.max(nearly_parallel_residual(&p, &fdata, 1e-5).unwrap());
    }
    let ok = algebra_dim == 21 && self_dual && max_cone <= tol && max_np <= 1e-3;
    (
        json!({
            "pairing": data.pairing,
            "annihilatorDim": algebra_dim,
            "selfDual": self_dual,
            "maxConeResidual": max_cone,
            "maxNearlyParallelResidual": max_np,
            "pass": ok,
        }),
        ok,
    )
}

fn check_obstruction(seed: u64) -> (serde_json::Value, bool) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_gap = 0.0f64;
    let mut tried = 0;
    while tried < 500 {
        let v = random_unit_point(&mut rng);
        let (x0, x1, x6) = (v[0], v[1], v[2]);
        let n = (x0 * x0 + x1 * x1 + x6 * x6).sqrt();
        if n < 0.1 || (x1 * x1 + x6 * x6) / (n * n) < 1e-4 {
            continue;
        }
        let (num, closed) = obstruction_value(x0 / n, x1 / n, x6 / n, 1e-9).unwrap();
        max_gap = max_gap.max((num - closed).abs());
        tried += 1;
    }
    let s = 1.0 / 3.0f64.sqrt();
    let (num, closed) = obstruction_value(s, s, s, 1e-9).unwrap();
    let anchor = (num - 4.0 / 33.0f64.sqrt()).abs() < 1e-12
        && (closed - 4.0 / 33.0f64.sqrt()).abs() < 1e-12;
    let ok = max_gap <= 1e-10 && anchor;
    (
        json!({"samples": tried, "maxGap": max_gap, "anchor4OverSqrt33": anchor, "pass": ok}),
        ok,
    )
}

fn check_quadrics(seed: u64) -> (serde_json::Value, bool) {
    let mut x = vec![0.0f64; 8];
    x[1] = 1.0;
    let report = orbit_sample(&x, 200, seed).unwrap();
    let ok = report.max_sphere_residual <= 1e-9
        && report.max_quadric_residuals.iter().all(|&q| q <= 1e-9)
        && report.max_linear_residuals.iter().all(|&l| l <= 1e-9);
    (
        json!({
            "sphere": report.max_sphere_residual,
            "quadrics": report.max_quadric_residuals,
            "linear": report.max_linear_residuals,
            "pass": ok,
        }),
        ok,
    )
}
