//! One trial of each suite, plus the trial-independent findings.

use std::error::Error;

use crate::algebra::{Mat, Poly, Scalar};
use crate::classify::{
    canonicalize_qc, complete_square, decompose_linear_product, image_equal, image_point, invariant_equal,
    structure_image, ImagePoint, SquareCase,
};
use crate::cohiggs::{
    det_glue, det_structure, determinant, determinant_on, integrable, k1_shape, phi0_for_target, phi0_glue_check,
    CoHiggsField, CoHiggsK0, CoHiggsK2, CoHiggsKBig, DetSection, DetStructure, K1Shape,
};
use crate::geometry::{
    cocycle_check, compare_golden, golden_cocycle_check, recover_sqrt, recover_sqrt_scalars, recover_tm1,
    sample_points, sym2_matrix, Bundle, Chart, LineSection, Sym2Triple, TangentSection,
};

use super::gen::{noncommuting_k1_library, Gen};
use super::{Finding, Theorem};

type Checked = Result<(), Box<dyn Error>>;

struct Log(Vec<Finding>);

impl Log {
    fn expect(&mut self, ok: bool, input: impl FnOnce() -> String, expected: &str, actual: impl FnOnce() -> String, note: &str) {
        if !ok {
            self.0.push(Finding::fail(input(), expected, actual(), note));
        }
    }
}

fn guarded(f: impl FnOnce(&mut Log) -> Checked) -> Vec<Finding> {
    let mut log = Log(Vec::new());
    if let Err(e) = f(&mut log) {
        log.0.push(Finding::fail("", "no error", e.to_string(), "computation raised an error"));
    }
    log.0
}

pub(super) fn trial(theorem: Theorem, g: &mut Gen, t: u64) -> Vec<Finding> {
    guarded(|log| match theorem {
        Theorem::Det1 => det1(g, log),
        Theorem::Det2 => det2(g, log, t),
        Theorem::Det3 => det3(g, log),
        Theorem::Det4 => det4(g, log),
        Theorem::Lemma1 => lemma1(g, log),
        Theorem::Lemma2 => lemma2(g, log),
        Theorem::Cocycle => cocycle(g, log),
        Theorem::Integrability => integrability(g, log, t),
    })
}

/// The case of `s` read directly off its quadratic coefficients.
fn pattern_case(s: &Poly) -> SquareCase {
    let nz = |a, b| !s.coeff_at(a, b).is_zero();
    match (nz(2, 0), nz(1, 1), nz(0, 2)) {
        (true, _, _) => SquareCase::I,
        (false, _, true) => SquareCase::II,
        (false, true, false) => SquareCase::III,
        (false, false, false) => SquareCase::IV,
    }
}

/// The determinant's structured triple agrees with the chart computation
/// on every chart, and the chart triples glue.
fn check_structure(log: &mut Log, field: &CoHiggsField, label: &str) -> Checked {
    let Some(s) = det_structure(field)? else {
        return Err(format!("{label}: no structured determinant").into());
    };
    for ch in Chart::ALL {
        let direct = determinant_on(field, ch)?;
        let product = s.triple(ch);
        log.expect(
            direct == product,
            || format!("{field:?}"),
            &product.to_string(),
            || direct.to_string(),
            &format!("{label}: determinant equals structured product on chart {ch}"),
        );
    }
    let glue = det_glue(field)?;
    log.expect(glue.ok(), || format!("{field:?}"), "glues", || format!("{:?}", glue.mismatches), &format!("{label}: determinant glues"));
    Ok(())
}

/// The image point from structured data agrees with the one recovered from
/// the raw triple, under both equality tests.
fn check_raw_recovery(log: &mut Log, det: &DetSection, label: &str) -> Checked {
    let structured = image_point(det)?;
    let raw = image_point(&DetSection { structure: None, ..det.clone() })?;
    let (eq, inv) = (image_equal(&structured, &raw), invariant_equal(&structured, &raw));
    log.expect(eq && inv, || det.triple.to_string(), &structured.to_string(), || raw.to_string(), &format!("{label}: raw triple recovers the image point"));
    let rebuilt = structured.invariant_triple(Chart::new(0));
    log.expect(rebuilt == det.triple, || det.triple.to_string(), &det.triple.to_string(), || rebuilt.to_string(), &format!("{label}: image point reconstructs the determinant"));
    Ok(())
}

/// Canonical equality and invariant equality agree, and match `expected`.
fn check_pair(log: &mut Log, a: &ImagePoint, b: &ImagePoint, expected: bool, label: &str) {
    let (eq, inv) = (image_equal(a, b), invariant_equal(a, b));
    log.expect(
        eq == expected && inv == expected,
        || format!("{a} | {b}"),
        &format!("canonical {expected}, invariant {expected}"),
        || format!("canonical {eq}, invariant {inv}"),
        label,
    );
}

fn qsym2_point(q: &LineSection, c: &crate::geometry::Tm1Section) -> Result<ImagePoint, Box<dyn Error>> {
    Ok(structure_image(&DetStructure::QSym2 { q: q.clone(), c: c.clone() })?)
}

fn det1(g: &mut Gen, log: &mut Log) -> Checked {
    let s = g.poly(2);
    let d = complete_square(&s)?;
    let recon = &(&d.lambda * &d.lambda) + &d.mu;
    log.expect(recon == s, || s.to_string(), &s.to_string(), || recon.to_string(), "lambda^2 + mu = s");
    let case = pattern_case(&s);
    log.expect(d.case == case, || s.to_string(), &case.to_string(), || d.case.to_string(), "case tag matches coefficients");
    log.expect(d.lambda.degree() <= 1 && d.mu.degree() <= 2, || s.to_string(), "deg lambda <= 1, deg mu <= 2", || format!("{} / {}", d.lambda, d.mu), "degree bounds");

    // surjectivity: realize q ⊗ Sym²(C) as the determinant of a k = 0 field
    let q = LineSection::new(g.nonzero_form(2));
    let c = g.tm1();
    let sq = complete_square(&-&q.local_rep(Chart::new(0)))?;
    let field = CoHiggsField::K0(CoHiggsK0::new(
        LineSection::from_chart0(&sq.lambda, 1)?,
        LineSection::from_chart0(&sq.mu, 2)?,
        c.clone(),
    )?);
    check_structure(log, &field, "k0")?;
    let det = determinant(&field)?;
    check_raw_recovery(log, &det, "k0")?;
    let raw = image_point(&DetSection { structure: None, ..det })?;
    let (cq, cc) = canonicalize_qc(&q, &c)?;
    let want = ImagePoint::QSym2 { q: cq, c: cc };
    log.expect(raw == want, || format!("q = {q}, C = {c}"), &want.to_string(), || raw.to_string(), "round trip through a k = 0 field");

    // orbit pairs
    let alpha = g.nonzero_scalar();
    let inv = alpha.inv().expect("nonzero");
    let p = qsym2_point(&q, &c)?;
    check_pair(log, &p, &qsym2_point(&q.scale(&(&alpha * &alpha)), &c.scale(&inv))?, true, "(q, C) ~ (a^2 q, C/a)");
    check_pair(log, &p, &qsym2_point(&q, &c.neg())?, true, "(q, C) ~ (q, -C)");
    let bump = g.nonzero_form(2);
    let q2 = LineSection::new(q.form() + &bump);
    let p2 = if q2.is_zero() { ImagePoint::Zero } else { qsym2_point(&q2, &c)? };
    check_pair(log, &p, &p2, false, "(q, C) differs from (q + e, C)");
    Ok(())
}

fn det2(g: &mut Gen, log: &mut Log, t: u64) -> Checked {
    let s = g.poly(2);
    let r = decompose_linear_product(&s)?;
    let recon = &(&r.lambda * &r.lambda) + &(&r.mu * &r.mu_prime);
    log.expect(recon == s, || s.to_string(), &s.to_string(), || recon.to_string(), "lambda^2 + mu mu' = s");
    let degs = [r.lambda.degree(), r.mu.degree(), r.mu_prime.degree()];
    log.expect(degs.iter().all(|&d| d <= 1), || s.to_string(), "all degrees <= 1", || format!("{degs:?}"), "linear parts");

    let k1 = match t % 4 {
        0 => g.k1_common_factor(),
        1 => g.k1_constant(),
        2 => g.k1_triangular(),
        _ => g.k1_conjugated(),
    };
    let field = CoHiggsField::K1(k1.clone());
    for ch in Chart::ALL {
        log.expect(integrable(&field, ch)?, || format!("{k1:?}"), "integrable", || "not integrable".into(), "constructed k = 1 field commutes");
    }
    let all_nonzero = !k1.a.is_zero() && !k1.b.is_zero() && !k1.c.is_zero();
    if all_nonzero && k1_shape(&k1) == K1Shape::Unmatched {
        log.0.push(Finding::note(
            format!("A = {}, B = {}, C = {}", k1.a, k1.b, k1.c),
            "integrable k = 1 field with A, B, C nonzero matches neither the common-factor nor the constant shape",
        ));
    } else {
        check_structure(log, &field, "k1")?;
        check_raw_recovery(log, &determinant(&field)?, "k1")?;
    }

    let a = g.indecomposable_tangent();
    let sym = |a: &TangentSection| structure_image(&DetStructure::SymTangent { a: a.clone() });
    let p = sym(&a)?;
    check_pair(log, &p, &sym(&a.neg())?, true, "A ~ -A");
    check_pair(log, &p, &sym(&a.scale(&Scalar::int(2)))?, false, "A differs from 2A");
    Ok(())
}

fn det3(g: &mut Gen, log: &mut Log) -> Checked {
    let q = g.line_section(2);
    let (f, gg, h) = phi0_for_target(&q);
    let target = q.local_rep(Chart::new(0));
    let got = &(-&(&f * &f)) - &gg.scale(&h);
    log.expect(got == target, || q.to_string(), &target.to_string(), || got.to_string(), "-F^2 - GH = q");
    log.expect(f.degree() <= 1 && gg.degree() <= 2, || q.to_string(), "deg F <= 1, deg G <= 2", || format!("{f} / {gg}"), "degree bounds");

    let k2 = g.k2();
    let glue = phi0_glue_check(&k2.f, &k2.g, &Poly::constant(k2.h.clone()));
    log.expect(glue.solvable, || format!("{k2:?}"), "solvable", || format!("{:?}", glue.chart1), "chart-1 form within degree bounds");
    let field = CoHiggsField::K2(k2.clone());
    for ch in Chart::ALL {
        log.expect(integrable(&field, ch)?, || format!("{k2:?}"), "integrable", || "not integrable".into(), "k = 2 field commutes");
    }
    check_structure(log, &field, "k2")?;
    let det = determinant(&field)?;
    check_raw_recovery(log, &det, "k2")?;
    let flipped = CoHiggsField::K2(CoHiggsK2 { c: k2.c.neg(), ..k2.clone() });
    let (p, pf) = (image_point(&det)?, image_point(&determinant(&flipped)?)?);
    check_pair(log, &p, &pf, true, "phi0 (x) C and phi0 (x) -C have the same image");
    Ok(())
}

fn det4(g: &mut Gen, log: &mut Log) -> Checked {
    let kb = g.kbig();
    let field = CoHiggsField::KBig(kb.clone());
    check_structure(log, &field, "kbig")?;
    let det = determinant(&field)?;
    check_raw_recovery(log, &det, "kbig")?;
    let p = image_point(&det)?;
    let image = |lambda: Scalar, c| -> Result<ImagePoint, Box<dyn Error>> {
        let f = CoHiggsField::KBig(CoHiggsKBig::new(kb.k, kb.rho.clone(), lambda, c)?);
        Ok(image_point(&determinant(&f)?)?)
    };
    let beta = g.nonzero_scalar();
    let b2 = &beta * &beta;
    check_pair(log, &p, &image(&kb.lambda / &b2, kb.c.scale(&beta))?, true, "(lambda, C) ~ (lambda/b^2, bC)");
    check_pair(log, &p, &image(kb.lambda.clone(), kb.c.neg())?, true, "C ~ -C");
    check_pair(log, &p, &image(&kb.lambda * &Scalar::int(2), kb.c.clone())?, false, "lambda differs from 2 lambda");
    Ok(())
}

fn lemma1(g: &mut Gen, log: &mut Log) -> Checked {
    let c = g.tm1();
    let ch = Chart::new(g.below(3) as usize);
    let roots = recover_tm1(&c.sym2(ch), ch)?;
    log.expect(roots.contains(&c), || c.to_string(), &format!("{c} or {}", c.neg()), || format!("{} / {}", roots[0], roots[1]), "Sym2 determines C up to sign");

    let t = loop {
        let t = [g.scalar(), g.scalar(), g.scalar()];
        if &t[1] * &t[1] != &t[0] * &t[2] {
            break t;
        }
    };
    let shown = format!("({}; {}; {})", t[0], t[1], t[2]);
    let r = recover_sqrt_scalars(t);
    log.expect(r.is_err(), || shown, "rejected", || format!("{r:?}"), "non-rank-1 constant triple is rejected");
    let tp = loop {
        let tp = Sym2Triple::new(g.poly(2), g.poly(2), g.poly(2));
        if &tp.t12 * &tp.t12 != &tp.t11 * &tp.t22 {
            break tp;
        }
    };
    let r = recover_sqrt(&tp);
    log.expect(r.is_err(), || tp.to_string(), "rejected", || format!("{r:?}"), "non-rank-1 triple is rejected");
    Ok(())
}

fn lemma2(g: &mut Gen, log: &mut Log) -> Checked {
    let (a, b) = (g.invertible2(), g.invertible2());
    let lhs = sym2_matrix(&a.mul(&b));
    let rhs = sym2_matrix(&a).mul(&sym2_matrix(&b));
    log.expect(lhs == rhs, || format!("g = {a}, h = {b}"), &rhs.to_string(), || lhs.to_string(), "Sym2(gh) = Sym2(g) Sym2(h)");
    let d = sym2_matrix(&a).det();
    let want = a.det().pow(3);
    log.expect(d == want, || a.to_string(), &want.to_string(), || d.to_string(), "det Sym2(g) = (det g)^3");
    Ok(())
}

fn cocycle(g: &mut Gen, log: &mut Log) -> Checked {
    let p = g.overlap_point();
    for b in Bundle::CHECKED {
        let r = cocycle_check(b, std::slice::from_ref(&p));
        log.expect(r.ok(), || p.to_string(), "identity", || format!("{} failures", r.failures.len()), &format!("cocycle identity for {b}"));
    }
    let (t, v, l) = (g.tangent(), g.tm1(), g.line_section(2));
    log.expect(t.glue().ok(), || t.to_string(), "glues", || "mismatch".into(), "section of T glues");
    log.expect(v.glue().ok(), || v.to_string(), "glues", || "mismatch".into(), "section of T(-1) glues");
    log.expect(l.glue().ok(), || l.to_string(), "glues", || "mismatch".into(), "section of O(2) glues");
    Ok(())
}

fn integrability(g: &mut Gen, log: &mut Log, t: u64) -> Checked {
    for field in [
        CoHiggsField::K0(g.k0()),
        CoHiggsField::K2(g.k2()),
        CoHiggsField::KBig(g.kbig()),
    ] {
        for ch in Chart::ALL {
            log.expect(integrable(&field, ch)?, || format!("{field:?}"), "integrable", || "not integrable".into(), &format!("tensor-decomposed field commutes on chart {ch}"));
        }
    }
    let lib = noncommuting_k1_library();
    let bad = CoHiggsField::K1(lib[(t as usize) % lib.len()].clone());
    for ch in Chart::ALL {
        log.expect(!integrable(&bad, ch)?, || format!("{bad:?}"), "not integrable", || "integrable".into(), "constructed non-commuting k = 1 field");
    }
    let any = g.any_field();
    let verdicts: Vec<bool> = Chart::ALL.iter().map(|&ch| integrable(&any, ch)).collect::<Result<_, _>>()?;
    log.expect(verdicts.windows(2).all(|w| w[0] == w[1]), || format!("{any:?}"), "same verdict on every chart", || format!("{verdicts:?}"), "chart independence");
    Ok(())
}

/// Findings that do not depend on the trial index.
pub(super) fn global(theorem: Theorem, seed: u64) -> Vec<Finding> {
    match theorem {
        Theorem::Det2 => vec![
            Finding::note(
                "statement of the k = 1 classification",
                "C is written as a section of T_{P^1}(-1) where T_{P^2}(-1) is meant; read as T_{P^2}(-1)",
            ),
            Finding::note(
                "second branch [[lambda, mu], [1, -lambda]] (x) C",
                "lambda and mu are read as constants there, unlike the sections of O(1) in the first branch",
            ),
        ],
        Theorem::Det3 => vec![Finding::note(
            "gluing of phi0 across charts",
            "phi0 moves between charts as J^-1 phi0 J / x_u, which is how the printed relation Phi0 g'12 = L Phi1 reads; \
             the determinant and integrability do not depend on this choice",
        )],
        Theorem::Det4 => vec![Finding::note(
            "k > 3 fields",
            "only (lambda, rho, C) is modeled; the local matrix [[0, lambda rho], [-1, 0]] (x) C stands in for phi0",
        )],
        Theorem::Lemma2 => {
            let swap = Mat::from_ints(&[&[0, 1], &[1, 0]]);
            let got = sym2_matrix(&swap);
            let want = Mat::from_ints(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
            if got == want {
                vec![Finding::pass("g = [[0,1],[1,0]]", "Sym2(g) matches the printed matrix")]
            } else {
                vec![Finding::fail("g = [[0,1],[1,0]]", want.to_string(), got.to_string(), "Sym2(g) differs from the printed matrix")]
            }
        }
        Theorem::Cocycle => {
            let mut out: Vec<Finding> = compare_golden()
                .into_iter()
                .map(|c| {
                    if c.matches() {
                        Finding::pass(c.label, c.describe())
                    } else {
                        Finding::note(c.label, c.describe())
                    }
                })
                .collect();
            let r = golden_cocycle_check(&sample_points(seed, 20));
            let msg = format!(
                "{}: {} of {} overlap points violate g31 g23 g12 = I",
                r.label,
                r.failures.len(),
                r.points_checked
            );
            out.push(if r.ok() { Finding::pass("printed T transitions", msg) } else { Finding::note("printed T transitions", msg) });
            out
        }
        _ => Vec::new(),
    }
}
