//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use hankel_hurwitz::bezout;
use hankel_hurwitz::eig_oracle;
use hankel_hurwitz::instances;
use hankel_hurwitz::linalg;
use hankel_hurwitz::markov;
use hankel_hurwitz::matpoly::column_profile;
use hankel_hurwitz::perturb::{self, PerturbConfig};
use hankel_hurwitz::split;
use hankel_hurwitz::stability::{self, Verdict};
use hankel_hurwitz::{CMat, Complex64, MatrixPolynomial, Tolerances};
use hankel_hurwitz_cli::parse_input_path;
use ndarray::{s, Array2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn z(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn mat<const N: usize>(rows: [[(f64, f64); N]; N]) -> CMat {
    Array2::from_shape_fn((N, N), |(i, j)| z(rows[i][j].0, rows[i][j].1))
}

// Matrices as printed for the 4×4 example.
fn published_s0() -> CMat {
    mat([
        [(1., 0.), (0., 1.), (-1., 0.), (0., -1.)],
        [(0., -1.), (2., 0.), (0., 2.), (-2., 0.)],
        [(-1., 0.), (0., -2.), (3., 0.), (0., 3.)],
        [(0., 1.), (-2., 0.), (0., -3.), (4., 0.)],
    ])
}

fn published_s1() -> CMat {
    mat([
        [(8., 0.), (-1., 4.), (-5., 1.), (4., -3.)],
        [(-1., -4.), (6., 0.), (2., 1.), (-5., -3.)],
        [(-5., -1.), (2., -1.), (4., 0.), (-3., 0.)],
        [(4., 3.), (-5., 3.), (-3., 0.), (6., 0.)],
    ])
}

fn published_s2() -> CMat {
    mat([
        [(117., 0.), (-56., 41.), (-87., 26.), (86., -15.)],
        [(-56., -41.), (92., 0.), (63., 0.), (-85., -41.)],
        [(-87., -26.), (63., 0.), (81., 0.), (-69., -26.)],
        [(86., 15.), (-85., 41.), (-69., 26.), (102., 0.)],
    ])
}

fn published_h0() -> CMat {
    mat([
        [(1., 0.), (0., 1.), (-1., 0.), (0., -1.), (8., 0.)],
        [(0., -1.), (2., 0.), (0., 2.), (-2., 0.), (-1., -4.)],
        [(-1., 0.), (0., -2.), (3., 0.), (0., 3.), (-5., -1.)],
        [(0., 1.), (-2., 0.), (0., -3.), (4., 0.), (4., 3.)],
        [(8., 0.), (-1., 4.), (-5., 1.), (4., -3.), (117., 0.)],
    ])
}

fn published_h1() -> CMat {
    mat([
        [(8., 0.), (-1., 4.), (-5., 1.)],
        [(-1., -4.), (6., 0.), (2., 1.)],
        [(-5., -1.), (2., -1.), (4., 0.)],
    ])
}

const H0_EIGS: [f64; 5] = [118.1688, 7.6381, 0.8146, 0.3711, 0.0073];
const H1_EIGS: [f64; 3] = [14.0143, 3.9496, 0.0361];

fn published_spectrum() -> Vec<Complex64> {
    vec![
        z(-8.1437, 0.0),
        z(-0.7723, 0.0),
        z(-0.3455, 2.5642),
        z(-0.3455, -2.5642),
        z(-0.1795, 4.9232),
        z(-0.1795, -4.9232),
        z(-0.0170, 4.3356),
        z(-0.0170, -4.3356),
    ]
}

const TABLE_R1_F: f64 = 5.43e-4;

fn example() -> MatrixPolynomial {
    parse_input_path(&common::data("example_paper.json")).expect("bundled example parses")
}

fn max_diff(a: &CMat, b: &CMat) -> f64 {
    if a.dim() != b.dim() {
        return f64::INFINITY;
    }
    linalg::max_abs(&(a - b))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn golden_markov() -> Check {
    let a = stability::analyze(&example(), &Tolerances::default()).map_err(|e| e.to_string())?;
    let expected = [published_s0(), published_s1(), published_s2()];
    ensure(a.sequence.params.len() >= 3, || {
        "fewer than three parameters".into()
    })?;
    let err = expected
        .iter()
        .zip(&a.sequence.params)
        .map(|(e, s)| max_diff(e, s))
        .fold(0.0, f64::max);
    ensure(err < 1e-9, || format!("max entry error {err:.3e}"))?;
    Ok(format!("max entry error {err:.1e}"))
}

fn golden_index_sets() -> Check {
    let a = stability::analyze(&example(), &Tolerances::default()).map_err(|e| e.to_string())?;
    let idx = a.index_sets.one_based();
    let got = (
        idx.tilde_set(0).to_vec(),
        idx.tilde_set(1).to_vec(),
        idx.i_set(0).to_vec(),
        idx.i_set(1).to_vec(),
    );
    let want = (vec![1, 2, 3, 4], vec![1], vec![1, 2, 3], vec![]);
    ensure(got == want, || format!("got {got:?}"))?;
    Ok(format!("{got:?}"))
}

fn golden_hankel() -> Check {
    let tol = Tolerances::default();
    let a = stability::analyze(&example(), &tol).map_err(|e| e.to_string())?;
    let e0 = max_diff(&a.hankel.h0, &published_h0());
    let e1 = max_diff(&a.hankel.h1, &published_h1());
    ensure(e0 < 1e-9 && e1 < 1e-9, || {
        format!("entry errors {e0:.3e}, {e1:.3e}")
    })?;
    let herm =
        linalg::hermitian_deviation(&a.hankel.h0).max(linalg::hermitian_deviation(&a.hankel.h1));
    ensure(herm < 1e-9, || format!("Hermitian deviation {herm:.3e}"))?;
    let report = a.report(&tol).map_err(|e| e.to_string())?;
    ensure(
        report.h0_inertia.is_positive_definite() && report.h1_inertia.is_positive_definite(),
        || format!("inertias {:?} {:?}", report.h0_inertia, report.h1_inertia),
    )?;
    ensure(report.verdict == Verdict::Stable, || {
        format!("verdict {:?}", report.verdict)
    })?;
    let out = common::run(&[
        "check",
        common::data("example_paper.json").to_str().unwrap(),
    ]);
    ensure(out.status.code() == Some(0), || {
        format!("exit status {:?}", out.status.code())
    })?;
    Ok(format!(
        "entry errors {e0:.1e}/{e1:.1e}, both positive definite, Stable, exit 0"
    ))
}

fn golden_spectra() -> Check {
    let tol = Tolerances::default();
    let f = example();
    let report = stability::hurwitz_check(&f, &tol).map_err(|e| e.to_string())?;
    ensure(
        report.h0_eigs.len() == 5 && report.h1_eigs.len() == 3,
        || "wrong sizes".into(),
    )?;
    let e0 = report
        .h0_eigs
        .iter()
        .zip(H0_EIGS)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    let e1 = report
        .h1_eigs
        .iter()
        .zip(H1_EIGS)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    let spectrum = eig_oracle::finite_spectrum(&f, tol.axis_tol).map_err(|e| e.to_string())?;
    let reference = published_spectrum();
    ensure(spectrum.finite_eigs.len() == 8, || {
        format!("{} finite eigenvalues", spectrum.finite_eigs.len())
    })?;
    let ef = spectrum
        .finite_eigs
        .iter()
        .zip(&reference)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    ensure(e0 < 1e-3 && e1 < 1e-3 && ef < 1e-3, || {
        format!("errors H0 {e0:.2e}, H1 {e1:.2e}, F {ef:.2e}")
    })?;
    ensure(spectrum.gamma_infinity == 4, || {
        format!("γ∞ = {}", spectrum.gamma_infinity)
    })?;
    Ok(format!(
        "errors H0 {e0:.1e}, H1 {e1:.1e}, F {ef:.1e}; 4 infinite"
    ))
}

fn inertia_identity() -> Check {
    let tol = Tolerances::default();
    let f = example();
    let report = stability::hurwitz_check(&f, &tol).map_err(|e| e.to_string())?;
    let pi = report.h0_inertia.pi + report.h1_inertia.pi;
    let spectrum = eig_oracle::finite_spectrum(&f, tol.axis_tol).map_err(|e| e.to_string())?;
    let inertia = stability::polynomial_inertia(&f, &tol).map_err(|e| e.to_string())?;
    ensure(pi == 8 && spectrum.inertia_imag_axis.minus == 8, || {
        format!(
            "π sum {pi}, oracle left count {}",
            spectrum.inertia_imag_axis.minus
        )
    })?;
    ensure(inertia.triple() == Some((0, 8, 0)), || {
        format!("{inertia:?}")
    })?;
    Ok("π(H0)+π(H1) = 8 = oracle; inertia (0, 8, 0)".into())
}

fn structural_suite() -> Check {
    let tol = Tolerances::default();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (mut worst_a, mut worst_c, mut worst_d) = (0.0_f64, 0.0_f64, 0.0_f64);
    let mut decided = 0;
    for n in 0..200 {
        let p = rng.random_range(1..=3);
        let inst = instances::random_diagonal(&mut rng, p, 5, n % 2 == 1);
        let f = &inst.poly;
        let ctx = |what: &str| format!("instance {n} (cdeg {:?}): {what}", inst.column_degrees);
        let a = stability::analyze(f, &tol).map_err(|e| ctx(&e.to_string()))?;

        // (a) the dominant and subordinated parts reassemble F
        let prof = column_profile(f, tol.zero_tol).map_err(|e| ctx(&e.to_string()))?;
        let raw = split::split(f, &prof).map_err(|e| ctx(&e.to_string()))?;
        let (d, sp) = (raw.d_poly(), raw.s_poly());
        for e in 0..=f.nominal_degree() {
            let mut target = f.coefficient(e);
            for (k, &c) in prof.cdeg.iter().enumerate() {
                if e > c {
                    target.column_mut(k).fill(linalg::ZERO);
                }
            }
            worst_a = worst_a.max(max_diff(&(d.coefficient(e) + sp.coefficient(e)), &target));
        }
        ensure(worst_a < 1e-12, || {
            ctx(&format!("reconstruction error {worst_a:.3e}"))
        })?;

        // (b) sizes
        let spectrum = eig_oracle::finite_spectrum(f, tol.axis_tol).map_err(|e| ctx(&e.to_string()))?;
        let size = a.hankel.h0.nrows() + a.hankel.h1.nrows();
        ensure(
            size == prof.degree_sum() && size == spectrum.finite_eigs.len(),
            || {
                ctx(&format!(
                    "sizes {size}, Σcdeg {}, finite {}",
                    prof.degree_sum(),
                    spectrum.finite_eigs.len()
                ))
            },
        )?;

        // (c) recurrence against the Laurent expansion
        let laurent =
            markov::laurent_oracle(&a.split, a.sequence.l).map_err(|e| ctx(&e.to_string()))?;
        for (s, o) in a.sequence.params.iter().zip(&laurent) {
            let scale = linalg::max_abs(o).max(1.0);
            worst_c = worst_c.max(max_diff(s, o) / scale);
        }
        ensure(worst_c < 1e-8, || {
            ctx(&format!("recurrence vs Laurent {worst_c:.3e}"))
        })?;

        // (d) defining identities
        let r = markov::sa_residual(&a.sequence, &a.split);
        worst_d = worst_d.max(r);
        ensure(r < 1e-9, || ctx(&format!("sa_residual {r:.3e}")))?;

        // (e) Bézoutian congruence
        let bc = bezout::bezout_inertia_check(f, &tol).map_err(|e| ctx(&e.to_string()))?;
        ensure(bc.matches, || {
            ctx(&format!(
                "Bézoutian {:?} vs Hankel {:?}",
                bc.inertia_bezout, bc.inertia_hankel_direct_sum
            ))
        })?;

        // (f) verdict against the eigenvalue oracle
        let report = a.report(&tol).map_err(|e| ctx(&e.to_string()))?;
        if report.verdict != Verdict::Indeterminate {
            decided += 1;
            let stable = report.verdict == Verdict::Stable;
            ensure(
                stable == spectrum.is_hurwitz() && stable == inst.is_stable(),
                || {
                    ctx(&format!(
                        "verdict {:?}, oracle hurwitz {}",
                        report.verdict,
                        spectrum.is_hurwitz()
                    ))
                },
            )?;
        }
    }
    Ok(format!(
        "200 instances; reconstruction {worst_a:.1e}, Laurent {worst_c:.1e}, residual {worst_d:.1e}; {decided} decided verdicts agree"
    ))
}

fn scalar_ground_truth() -> Check {
    let tol = Tolerances::default();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let (mut indeterminate, mut wrong) = (0, 0);
    for _ in 0..500 {
        let inst = instances::random_scalar(&mut rng, 8);
        let report = stability::hurwitz_check(&inst.poly, &tol).map_err(|e| e.to_string())?;
        match report.verdict {
            Verdict::Indeterminate => indeterminate += 1,
            v => {
                if (v == Verdict::Stable) != inst.is_stable() {
                    wrong += 1;
                }
            }
        }
    }
    let rate = indeterminate as f64 / 500.0;
    ensure(wrong == 0 && rate < 0.05, || {
        format!(
            "{wrong} disagreements, indeterminate rate {:.1}%",
            100.0 * rate
        )
    })?;
    Ok(format!(
        "0 disagreements, indeterminate rate {:.1}%",
        100.0 * rate
    ))
}

// Square block Hankel matrices `[s_{i+j}]` and `[s_{i+j+1}]` from the
// Laurent expansion of the unnormalized split.
fn classical_hankel(f: &MatrixPolynomial, tol: &Tolerances) -> Result<(CMat, CMat), String> {
    let prof = column_profile(f, tol.zero_tol).map_err(|e| e.to_string())?;
    let sr = split::split(f, &prof).map_err(|e| e.to_string())?;
    let p = f.size();
    let n = f.degree();
    let (k0, k1) = (n.div_ceil(2), n / 2);
    let params = markov::laurent_oracle(&sr, 2 * k0).map_err(|e| e.to_string())?;
    let build = |blocks: usize, shift: usize| {
        let mut h = linalg::zeros(blocks * p, blocks * p);
        for i in 0..blocks {
            for j in 0..blocks {
                h.slice_mut(s![i * p..(i + 1) * p, j * p..(j + 1) * p])
                    .assign(&params[i + j + shift]);
            }
        }
        h
    };
    Ok((build(k0, 0), build(k1, 1)))
}

fn verdict_of(h0: &CMat, h1: &CMat, tol: &Tolerances) -> Result<Verdict, String> {
    let (i0, _) = stability::hermitian_spectrum(h0, tol.inertia_tol).map_err(|e| e.to_string())?;
    let (i1, _) = stability::hermitian_spectrum(h1, tol.inertia_tol).map_err(|e| e.to_string())?;
    Ok(if i0.nu + i1.nu > 0 {
        Verdict::NotStable
    } else if i0.delta + i1.delta > 0 {
        Verdict::Indeterminate
    } else {
        Verdict::Stable
    })
}

fn monic_reduction() -> Check {
    let tol = Tolerances::default();
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut worst = 0.0_f64;
    for n in 0..50 {
        let p = rng.random_range(1..=3);
        let degree = rng.random_range(1..=5);
        let inst = instances::random_monic_hermitian(&mut rng, p, degree);
        let ctx = |what: String| format!("instance {n} (p {p}, degree {degree}): {what}");
        let a = stability::analyze(&inst.poly, &tol).map_err(|e| ctx(e.to_string()))?;
        // offsets list every block start plus the end
        let full = |offsets: &[usize], rows: usize| {
            offsets.iter().enumerate().all(|(i, &o)| o == i * p) && offsets.last() == Some(&rows)
        };
        ensure(
            full(&a.hankel.block_offsets_h0, a.hankel.h0.nrows())
                && full(&a.hankel.block_offsets_h1, a.hankel.h1.nrows()),
            || {
                ctx(format!(
                    "offsets {:?} {:?}",
                    a.hankel.block_offsets_h0, a.hankel.block_offsets_h1
                ))
            },
        )?;
        let (c0, c1) = classical_hankel(&inst.poly, &tol).map_err(&ctx)?;
        let scale = linalg::max_abs(&c0).max(linalg::max_abs(&c1)).max(1.0);
        let diff = max_diff(&a.hankel.h0, &c0).max(max_diff(&a.hankel.h1, &c1)) / scale;
        worst = worst.max(diff);
        ensure(diff < 1e-8, || {
            ctx(format!("differs from square Hankel by {diff:.3e}"))
        })?;
        let report = a.report(&tol).map_err(|e| ctx(e.to_string()))?;
        let classical = verdict_of(&c0, &c1, &tol).map_err(&ctx)?;
        ensure(report.verdict == classical, || {
            ctx(format!(
                "verdict {:?} vs square Hankel {classical:?}",
                report.verdict
            ))
        })?;
        if report.verdict != Verdict::Indeterminate {
            ensure(
                (report.verdict == Verdict::Stable) == inst.is_stable(),
                || ctx(format!("verdict {:?} vs roots", report.verdict)),
            )?;
        }
    }
    Ok(format!(
        "50 instances, full blocks, max deviation from square Hankel {worst:.1e}"
    ))
}

fn log_log_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let lx: Vec<f64> = xs.iter().map(|x| x.log10()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.log10()).collect();
    let n = lx.len() as f64;
    let (mx, my) = (lx.iter().sum::<f64>() / n, ly.iter().sum::<f64>() / n);
    let cov: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let var: f64 = lx.iter().map(|x| (x - mx).powi(2)).sum();
    cov / var
}

fn perturbation_harness() -> Check {
    let grid: Vec<f64> = (0..6).map(|k| 10f64.powf(-3.5 + 0.1 * k as f64)).collect();
    let cfg = PerturbConfig::new(grid.clone(), 200, 7);
    let res = perturb::run_experiment(&example(), &cfg, &Tolerances::default())
        .map_err(|e| e.to_string())?;
    let first = &res.summaries[0];
    ensure(first.failures == 0, || {
        format!("{} failed samples", first.failures)
    })?;
    ensure(first.violations() == 0, || {
        format!(
            "{} violations (cat i {}, cat ii {})",
            first.violations(),
            first.cat_i,
            first.cat_ii
        )
    })?;
    let r1 = first.r_f[0];
    let ratio = r1 / TABLE_R1_F;
    ensure((0.1..=10.0).contains(&ratio), || {
        format!("mean r1(F) {r1:.3e}, ratio {ratio:.2}")
    })?;
    let means: Vec<f64> = res
        .summaries
        .iter()
        .map(|s| s.r_f.iter().sum::<f64>() / s.r_f.len() as f64)
        .collect();
    let slope = log_log_slope(&grid, &means);
    ensure((0.8..=1.2).contains(&slope), || {
        format!("log-log slope {slope:.3}")
    })?;
    Ok(format!(
        "0 violations, mean r1(F) {r1:.2e} (ratio {ratio:.2}), slope {slope:.3}"
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("golden Markov parameters", golden_markov),
        ("golden index sets", golden_index_sets),
        ("golden Hankel pair", golden_hankel),
        ("golden spectra", golden_spectra),
        ("inertia identity", inertia_identity),
        ("structural property suite", structural_suite),
        ("scalar ground truth", scalar_ground_truth),
        ("monic reduction", monic_reduction),
        ("perturbation harness", perturbation_harness),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: {name}: PASS ({detail}) [{secs:.2}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: {name}: FAIL ({detail}) [{secs:.2}s]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
