//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
//!
//! Every draw comes from a `(seed, index)` ChaCha stream, so the run is
//! reproducible.

use std::error::Error;
use std::process::ExitCode;

use rayon::prelude::*;

use cohiggs::algebra::{Mat, Poly, Scalar};
use cohiggs::classify::{
    complete_square, decompose_linear_product, image_equal, image_point, invariant_equal, structure_image, ImagePoint,
    SquareCase,
};
use cohiggs::cli;
use cohiggs::cohiggs::{
    det_glue, det_structure, determinant, determinant_on, integrable, phi0_for_target, schwarz_info, CoHiggsError,
    CoHiggsField, CoHiggsK2, CoHiggsKBig, DetStructure, Splitting,
};
use cohiggs::geometry::{
    cocycle_check, compare_golden, golden_cocycle_check, recover_sqrt, recover_tm1, sample_points, sym2_matrix,
    Bundle, Chart, LineSection, Sym2Triple,
};
use cohiggs::verify::{noncommuting_k1_library, Gen, DEFAULT_BOUND};

type Outcome = Result<String, String>;

const SEED: u64 = 20240611;

fn gen(stream: u64, i: u64) -> Gen {
    Gen::new(SEED ^ (stream << 32), i, DEFAULT_BOUND)
}

/// Runs `check` on `n` independent streams and collects the failures.
fn sweep(stream: u64, n: u64, check: impl Fn(&mut Gen) -> Result<Option<String>, Box<dyn Error>> + Sync) -> Vec<String> {
    (0..n)
        .into_par_iter()
        .filter_map(|i| match check(&mut gen(stream, i)) {
            Ok(None) => None,
            Ok(Some(msg)) => Some(format!("#{i}: {msg}")),
            Err(e) => Some(format!("#{i}: error {e}")),
        })
        .collect()
}

fn verdict(fails: Vec<String>, ok: String) -> Outcome {
    match fails.first() {
        None => Ok(ok),
        Some(first) => Err(format!("{} failures, first {first}", fails.len())),
    }
}

fn expected_case(s: &Poly) -> SquareCase {
    let (a, b, c) = (s.coeff_at(2, 0), s.coeff_at(1, 1), s.coeff_at(0, 2));
    match (a.is_zero(), c.is_zero(), b.is_zero()) {
        (false, _, _) => SquareCase::I,
        (true, false, _) => SquareCase::II,
        (true, true, false) => SquareCase::III,
        _ => SquareCase::IV,
    }
}

fn square_identity() -> Outcome {
    let fails = sweep(1, 1000, |g| {
        let s = g.poly(2);
        let d = complete_square(&s)?;
        let back = &(&d.lambda * &d.lambda) + &d.mu;
        Ok(if back != s {
            Some(format!("{s}: got {back}"))
        } else if d.case != expected_case(&s) {
            Some(format!("{s}: case {}", d.case))
        } else if d.lambda.degree() > 1 || d.mu.degree() > 2 {
            Some(format!("{s}: degrees"))
        } else {
            None
        })
    });
    verdict(fails, "1000 polynomials, s = lambda^2 + mu with matching case tags".into())
}

fn linear_product() -> Outcome {
    let fails = sweep(2, 500, |g| {
        let s = g.poly(2);
        let r = decompose_linear_product(&s)?;
        let back = &(&r.lambda * &r.lambda) + &(&r.mu * &r.mu_prime);
        let linear = [&r.lambda, &r.mu, &r.mu_prime].iter().all(|p| p.degree() <= 1);
        Ok((back != s || !linear).then(|| format!("{s}: {} | {} | {}", r.lambda, r.mu, r.mu_prime)))
    });
    verdict(fails, "500 polynomials, s = lambda^2 + mu mu' with linear parts".into())
}

fn sign_recovery() -> Outcome {
    let mut fails = sweep(3, 500, |g| {
        let c = loop {
            let c = g.tm1();
            if !c.is_zero() {
                break c;
            }
        };
        let ch = Chart::new(g.below(3) as usize);
        let [a, b] = recover_tm1(&c.sym2(ch), ch)?;
        Ok((!(a == c || b == c) || a != b.neg()).then(|| format!("{c}: {a} / {b}")))
    });
    fails.extend(sweep(4, 100, |g| {
        let t = loop {
            let t = Sym2Triple::new(g.poly(2), g.poly(2), g.poly(2));
            if &t.t12 * &t.t12 != &t.t11 * &t.t22 {
                break t;
            }
        };
        Ok(recover_sqrt(&t).is_ok().then(|| format!("accepted {t}")))
    }));
    verdict(fails, "500 sections recovered up to sign, 100 non-rank-1 triples rejected".into())
}

fn sym2_laws() -> Outcome {
    let mut fails = sweep(5, 200, |g| {
        let (a, b) = (g.invertible2(), g.invertible2());
        let mult = sym2_matrix(&a.mul(&b)) == sym2_matrix(&a).mul(&sym2_matrix(&b));
        let det = sym2_matrix(&a).det() == a.det().pow(3);
        Ok((!mult || !det).then(|| format!("g = {a}, h = {b}")))
    });
    let swap = sym2_matrix(&Mat::from_ints(&[&[0, 1], &[1, 0]]));
    if swap != Mat::from_ints(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]) {
        fails.push(format!("swap matrix gives {swap}"));
    }
    verdict(fails, "200 matrices multiplicative with det^3, swap matrix as printed".into())
}

fn cocycles() -> Outcome {
    let points = sample_points(SEED, 24);
    let mut fails = Vec::new();
    for b in [Bundle::Line(1), Bundle::Line(2), Bundle::Tangent, Bundle::TangentMinus1] {
        let r = cocycle_check(b, &points);
        if !r.ok() || r.points_checked < 20 {
            fails.push(format!("{b}: {} of {} points", r.failures.len(), r.points_checked));
        }
    }
    let mismatched = compare_golden().iter().filter(|c| !c.matches()).count();
    let printed = golden_cocycle_check(&points);
    verdict(
        fails,
        format!(
            "O(1), O(2), T, T(-1) at 24 points; {mismatched} printed T transitions differ and the printed set fails at {} points (reported as findings)",
            printed.failures.len()
        ),
    )
}

fn integrability() -> Outcome {
    let mut fails = sweep(6, 100, |g| {
        for f in [CoHiggsField::K0(g.k0()), CoHiggsField::K2(g.k2()), CoHiggsField::KBig(g.kbig())] {
            for ch in Chart::ALL {
                if !integrable(&f, ch)? {
                    return Ok(Some(format!("{f:?} on {ch}")));
                }
            }
        }
        let any = g.any_field();
        let v = Chart::ALL.iter().map(|&ch| integrable(&any, ch)).collect::<Result<Vec<_>, _>>()?;
        Ok((v[0] != v[1] || v[1] != v[2]).then(|| format!("chart-dependent verdict {v:?}")))
    });
    let lib = noncommuting_k1_library();
    for (i, k1) in lib.iter().enumerate() {
        let f = CoHiggsField::K1(k1.clone());
        for ch in Chart::ALL {
            if integrable(&f, ch).map_err(|e| e.to_string())? {
                fails.push(format!("library field {i} commutes on {ch}"));
            }
        }
    }
    if lib.len() != 20 {
        fails.push(format!("library has {} fields", lib.len()));
    }
    verdict(fails, "K0/K2/KBig integrable, 20 library fields not, 100 chart-independent verdicts".into())
}

fn structured(f: &CoHiggsField) -> Result<Option<String>, Box<dyn Error>> {
    let Some(s) = det_structure(f)? else {
        return Ok(Some("no factored form".into()));
    };
    for ch in Chart::ALL {
        if determinant_on(f, ch)? != s.triple(ch) {
            return Ok(Some(format!("{s} differs on {ch}")));
        }
    }
    Ok((!det_glue(f)?.ok()).then(|| format!("{s} does not glue")))
}

fn factorization() -> Outcome {
    let fails = sweep(7, 100, |g| {
        let k1 = if g.chance(1, 2) { g.k1_common_factor() } else { g.k1_constant() };
        for f in [
            CoHiggsField::K0(g.k0()),
            CoHiggsField::K1(k1),
            CoHiggsField::K2(g.k2()),
            CoHiggsField::KBig(g.kbig()),
        ] {
            if let Some(m) = structured(&f)? {
                return Ok(Some(format!("k = {}: {m}", f.index())));
            }
        }
        Ok(None)
    });
    verdict(fails, "100 fields per variant equal their factored determinant and glue".into())
}

fn surjectivity() -> Outcome {
    let fails = sweep(8, 100, |g| {
        let q = LineSection::new(g.nonzero_form(2));
        let (f, gg, h) = phi0_for_target(&q);
        let got = &(-&(&f * &f)) - &gg.scale(&h);
        Ok((got != q.local_rep(Chart::new(0)) || f.degree() > 1 || gg.degree() > 2).then(|| format!("{q}: {got}")))
    });
    verdict(fails, "100 conics written as -F^2 - GH within degree bounds".into())
}

fn pair(a: &ImagePoint, b: &ImagePoint, expected: bool) -> Option<String> {
    let (eq, inv) = (image_equal(a, b), invariant_equal(a, b));
    (eq != inv || eq != expected).then(|| format!("{a} | {b}: canonical {eq}, invariant {inv}, expected {expected}"))
}

fn orbit_pairs() -> Outcome {
    let qsym = |q: &LineSection, c: &cohiggs::geometry::Tm1Section| {
        structure_image(&DetStructure::QSym2 { q: q.clone(), c: c.clone() })
    };
    let mut fails = sweep(9, 500, |g| {
        let (q, c) = (LineSection::new(g.nonzero_form(2)), g.tm1());
        if c.is_zero() {
            return Ok(None);
        }
        let a = g.nonzero_scalar();
        let p = qsym(&q, &c)?;
        let moved = qsym(&q.scale(&(&a * &a)), &c.scale(&a.inv().expect("nonzero")))?;
        let q2 = LineSection::new(q.form() + &g.nonzero_form(2));
        let other = if q2.is_zero() { ImagePoint::Zero } else { qsym(&q2, &c)? };
        Ok(pair(&p, &moved, true).or_else(|| pair(&p, &other, false)))
    });
    fails.extend(sweep(10, 500, |g| {
        let a = g.indecomposable_tangent();
        let sym = |a| structure_image(&DetStructure::SymTangent { a });
        let (p, neg, twice) = (sym(a.clone())?, sym(a.neg())?, sym(a.scale(&Scalar::int(2)))?);
        Ok(pair(&p, &neg, true).or_else(|| pair(&p, &twice, false)))
    }));
    fails.extend(sweep(11, 500, |g| {
        let k2 = g.k2();
        let img = |k: CoHiggsK2| -> Result<ImagePoint, Box<dyn Error>> {
            Ok(image_point(&determinant(&CoHiggsField::K2(k))?)?)
        };
        let p = img(k2.clone())?;
        let flipped = img(CoHiggsK2 { c: k2.c.neg(), ..k2.clone() })?;
        let other = img(CoHiggsK2 { h: &k2.h + &Scalar::one(), ..k2.clone() })?;
        // -(F^2 + GH) only moves with H when G is nonzero
        let expect_other = k2.g.is_zero() || k2.c.is_zero();
        Ok(pair(&p, &flipped, true).or_else(|| pair(&p, &other, expect_other)))
    }));
    fails.extend(sweep(12, 500, |g| {
        let kb = g.kbig();
        let img = |lambda: Scalar, c| -> Result<ImagePoint, Box<dyn Error>> {
            let f = CoHiggsField::KBig(CoHiggsKBig::new(kb.k, kb.rho.clone(), lambda, c)?);
            Ok(image_point(&determinant(&f)?)?)
        };
        let p = img(kb.lambda.clone(), kb.c.clone())?;
        let b = g.nonzero_scalar();
        let absorbed = img(&kb.lambda / &(&b * &b), kb.c.scale(&b))?;
        let doubled = img(&kb.lambda * &Scalar::int(2), kb.c.clone())?;
        let expect_doubled = kb.c.is_zero();
        Ok(pair(&p, &absorbed, true).or_else(|| pair(&p, &doubled, expect_doubled)))
    }));
    verdict(fails, "4 x 500 orbit pairs, canonical and invariant equality agree".into())
}

fn metadata() -> Outcome {
    let mut fails = Vec::new();
    for k in (0..=10).filter(|&k| k != 3) {
        let info = schwarz_info(k).map_err(|e| e.to_string())?;
        let kk = k as i64;
        let split = match k {
            0 => Some(Splitting::OPlusOMinus1),
            1 => Some(Splitting::OPlusO),
            2 => Some(Splitting::Tangent),
            _ => None,
        };
        let ok = info.c1 == kk - 1
            && info.c2 == kk * (kk - 1) / 2
            && split.map_or(true, |s| info.splitting == s)
            && (k < 4 || info.h1_end0 == kk * kk - 4);
        if !ok {
            fails.push(format!("k = {k}: {info:?}"));
        }
    }
    if schwarz_info(3) != Err(CoHiggsError::ExcludedIndex) {
        fails.push("k = 3 accepted".into());
    }
    verdict(fails, "c1, c2, splitting and h1(End0) for k in 0..=10, k = 3 rejected".into())
}

fn cli_output(args: &[&str]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let code = cli::run(std::iter::once("cohiggs").chain(args.iter().copied()), &mut out, &mut Vec::new());
    (code, out)
}

fn cli_determinism() -> Outcome {
    let mut fails = Vec::new();
    for th in ["det2", "det4", "cocycle"] {
        for json in [false, true] {
            let mut args = vec!["verify", "--theorem", th, "--trials", "40", "--seed", "11"];
            if json {
                args.push("--json");
            }
            let base = cli_output(&args);
            let mut runs = vec![cli_output(&args)];
            for t in ["1", "2", "4"] {
                let mut a = args.clone();
                a.extend(["--threads", t]);
                runs.push(cli_output(&a));
            }
            if base.0 != 0 || runs.iter().any(|r| r != &base) {
                fails.push(format!("{th} (json {json})"));
            }
        }
    }
    verdict(fails, "verify output byte-identical across runs and thread counts".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("square completion", square_identity),
        ("linear product", linear_product),
        ("recovery up to sign", sign_recovery),
        ("symmetric square laws", sym2_laws),
        ("transition cocycles", cocycles),
        ("integrability", integrability),
        ("determinant factorization", factorization),
        ("k = 2 surjectivity", surjectivity),
        ("image well-definedness", orbit_pairs),
        ("bundle metadata", metadata),
        ("cli determinism", cli_determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(msg) => println!("criterion {:>2} PASS {name}: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {msg}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
