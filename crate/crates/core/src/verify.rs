//! Batch verification driver behind the `verify` binary.
//!
//! Each check draws its cases from `ChaCha8Rng::seed_from_u64(seed)` with the
//! stream set to the case index, so reports are reproducible case by case.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use nalgebra::{DMatrix, DVector};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::acsfield::{
    integrability_residual, lebrun_symmetry_norm, make_conjugated_field, make_constant_field, make_rotated_field,
    nijenhuis_direct, nijenhuis_formula, AcsField, ResidualForm,
};
use crate::chartop::{
    chern_character_coefficient, critical_point, dolbeault_index_s4, gradient_ascent, morse_h,
    morse_hessian_spectrum, newton_chern_identity, poincare_polynomial, poincare_recursion_holds, random_state,
    signature_index, AscentConfig, Rational,
};
use crate::error::{Error, Result};
use crate::linalg::frobenius;
use crate::matcore::{kaehler_convergence, ComplexStructure};
use crate::retract::decompose;
use crate::sample;
use crate::spheregeo::{
    bracket, connection_coefficients, covariant_derivative, embed, frame_coordinate_derivative,
    sectional_curvature_with_step, ChartPoint, FnField, VectorField, CURVATURE_FD_STEP,
};
use crate::twistorsec::{
    decomposition_residual, equivalence_sweep, lemma33_check, Differentiation, SweepConfig,
};

pub const SCHEMA: &str = "twistor-verifier/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Kaehler,
    Retract,
    Sphere,
    Nijenhuis,
    Section,
    Holomorphy,
    Morse,
    Index,
    Poincare,
    All,
}

impl Check {
    pub const EACH: [Check; 9] = [
        Check::Kaehler,
        Check::Retract,
        Check::Sphere,
        Check::Nijenhuis,
        Check::Section,
        Check::Holomorphy,
        Check::Morse,
        Check::Index,
        Check::Poincare,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Kaehler => "kaehler",
            Check::Retract => "retract",
            Check::Sphere => "sphere",
            Check::Nijenhuis => "nijenhuis",
            Check::Section => "section",
            Check::Holomorphy => "holomorphy",
            Check::Morse => "morse",
            Check::Index => "index",
            Check::Poincare => "poincare",
            Check::All => "all",
        }
    }

    /// Default `(tol, h)`; `h` is `None` where the check takes no step.
    pub fn defaults(self) -> (f64, Option<f64>) {
        match self {
            Check::Kaehler => (1e-8, Some(1e-2)),
            Check::Retract => (1e-9, None),
            Check::Sphere => (1e-6, Some(CURVATURE_FD_STEP)),
            Check::Nijenhuis => (1e-6, None),
            Check::Section => (1e-6, Some(1e-5)),
            Check::Holomorphy => (1e-5, Some(1e-5)),
            Check::Morse => (1e-3, Some(1e-2)),
            Check::Index | Check::Poincare | Check::All => (0.0, None),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub check: Check,
    pub n: usize,
    pub seed: u64,
    pub samples: usize,
    /// Overrides the per-check tolerance.
    pub tol: Option<f64>,
    /// Overrides the per-check step.
    pub h: Option<f64>,
    pub output: OutputFormat,
}

impl RunConfig {
    pub fn new(check: Check) -> Self {
        Self {
            check,
            n: 3,
            seed: 0,
            samples: 50,
            tol: None,
            h: None,
            output: OutputFormat::Text,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidArgument("--n must be at least 1".into()));
        }
        if self.samples == 0 {
            return Err(Error::InvalidArgument("--samples must be at least 1".into()));
        }
        if let Some(t) = self.tol {
            if !(t > 0.0 && t.is_finite()) {
                return Err(Error::InvalidArgument("--tol must be positive".into()));
            }
        }
        if let Some(h) = self.h {
            if !(h > 0.0 && h.is_finite()) {
                return Err(Error::InvalidArgument("--h must be positive".into()));
            }
        }
        Ok(())
    }

    fn tol(&self) -> f64 {
        self.tol.unwrap_or(self.check.defaults().0)
    }

    fn h(&self) -> Option<f64> {
        self.h.or(self.check.defaults().1)
    }
}

/// Effective parameters echoed into the report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Parameters {
    pub n: usize,
    pub seed: u64,
    pub samples: usize,
    pub tol: f64,
    pub h: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub index: usize,
    pub label: String,
    /// SHA-256 of the case inputs.
    pub digest: String,
    pub residual: f64,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub data: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub schema: String,
    pub check: Check,
    pub parameters: Parameters,
    pub cases: Vec<CaseRecord>,
    pub max_residual: f64,
    pub pass: bool,
    /// Check-level facts that are not per-case, such as sweep redraw counts.
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub summary: Value,
    /// Kept out of the JSON so identical configs give identical bytes.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl CheckReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let p = &self.parameters;
        let _ = writeln!(
            out,
            "check {} n={} seed={} samples={} tol={:e} h={}",
            self.check.name(),
            p.n,
            p.seed,
            p.samples,
            p.tol,
            p.h.map_or("-".to_string(), |h| format!("{h:e}"))
        );
        for c in &self.cases {
            let _ = writeln!(
                out,
                "  [{:>4}] {:<4} {:<40} residual={:.3e}",
                c.index,
                if c.pass { "ok" } else { "FAIL" },
                c.label,
                c.residual
            );
        }
        let _ = writeln!(
            out,
            "{}: {} cases, max residual {:.3e}",
            if self.pass { "PASS" } else { "FAIL" },
            self.cases.len(),
            self.max_residual
        );
        out
    }
}

struct Cases {
    check: Check,
    seed: u64,
    records: Vec<CaseRecord>,
}

impl Cases {
    fn new(check: Check, seed: u64) -> Self {
        Self {
            check,
            seed,
            records: Vec::new(),
        }
    }

    fn push(&mut self, label: impl Into<String>, inputs: Value, residual: f64, pass: bool, data: Value) {
        let index = self.records.len();
        let label = label.into();
        let preimage = json!({
            "check": self.check.name(),
            "seed": self.seed,
            "index": index,
            "label": label,
            "inputs": inputs,
        });
        let digest = hex::encode(Sha256::digest(preimage.to_string().as_bytes()));
        self.records.push(CaseRecord {
            index,
            label,
            digest,
            residual,
            pass: pass && !residual.is_nan(),
            data,
        });
    }

    fn push_result(&mut self, label: impl Into<String>, inputs: Value, r: Result<(f64, bool, Value)>) {
        match r {
            Ok((residual, pass, data)) => self.push(label, inputs, residual, pass, data),
            Err(e) => self.push(label, inputs, f64::INFINITY, false, json!({ "error": e.to_string() })),
        }
    }
}

fn case_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

fn vec_json(v: &DVector<f64>) -> Value {
    json!(v.iter().copied().collect::<Vec<_>>())
}

fn mat_json(m: &DMatrix<f64>) -> Value {
    json!((0..m.nrows())
        .map(|i| m.row(i).iter().copied().collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

/// Runs one check, or every check for [`Check::All`].
pub fn run(config: &RunConfig) -> Result<CheckReport> {
    config.validate()?;
    let start = Instant::now();
    let mut summary = Value::Null;
    let records = match config.check {
        Check::Kaehler => check_kaehler(config),
        Check::Retract => check_retract(config),
        Check::Sphere => check_sphere(config),
        Check::Nijenhuis => check_nijenhuis(config),
        Check::Section => check_section(config),
        Check::Holomorphy => {
            let (records, s) = check_holomorphy(config)?;
            summary = s;
            records
        }
        Check::Morse => check_morse(config),
        Check::Index => check_index(config),
        Check::Poincare => check_poincare(config),
        Check::All => check_all(config)?,
    };
    let max_residual = records.iter().map(|c| c.residual).fold(0.0, f64::max);
    let pass = records.iter().all(|c| c.pass);
    Ok(CheckReport {
        schema: SCHEMA.to_string(),
        check: config.check,
        parameters: Parameters {
            n: config.n,
            seed: config.seed,
            samples: config.samples,
            tol: config.tol(),
            h: config.h(),
        },
        cases: records,
        max_residual,
        pass,
        summary,
        wall_time: start.elapsed(),
    })
}

fn check_all(config: &RunConfig) -> Result<Vec<CaseRecord>> {
    let mut cases = Cases::new(Check::All, config.seed);
    for check in Check::EACH {
        let sub = RunConfig {
            check,
            ..config.clone()
        };
        let report = run(&sub)?;
        let data = serde_json::to_value(&report)?;
        cases.push(check.name(), json!({ "check": check.name() }), report.max_residual, report.pass, data);
    }
    Ok(cases.records)
}

/// Kähler identity along random curves: the finite-difference residual must
/// decay at second order and extrapolate to zero.
fn check_kaehler(config: &RunConfig) -> Vec<CaseRecord> {
    let tol = config.tol();
    let h = config.h().expect("kaehler has a step");
    let steps = [h, h / 2.0, h / 4.0];
    let mut cases = Cases::new(Check::Kaehler, config.seed);
    for i in 0..config.samples {
        let mut rng = case_rng(config.seed, i);
        let orthogonal = i % 2 == 0;
        let curve = if orthogonal {
            sample::orthogonal_curve(&mut rng, config.n)
        } else {
            sample::structure_curve(&mut rng, config.n)
        };
        let field = sample::field_along(&mut rng, &curve, orthogonal);
        let label = if orthogonal { "orthogonal curve" } else { "general curve" };
        let r = kaehler_convergence(|s| curve.at(s), |s| field.at(s), 0.0, &steps, 1e-8).map(|st| {
            // a residual that is zero at every step has no order to measure;
            // this happens when the curve is constant, e.g. orthogonal curves for n = 1
            let exact = st.residuals.iter().all(|&r| r <= f64::EPSILON);
            let pass = (exact || st.order >= 1.8) && st.extrapolated <= tol;
            (
                st.extrapolated,
                pass,
                json!({ "order": st.order, "residuals": st.residuals, "exact": exact }),
            )
        });
        cases.push_result(label, json!({ "a0": mat_json(&curve.at(0.0)) }), r);
    }
    cases.records
}

/// Decomposition identities and membership of the whole retraction path.
fn check_retract(config: &RunConfig) -> Vec<CaseRecord> {
    let tol = config.tol();
    let mut cases = Cases::new(Check::Retract, config.seed);
    for i in 0..config.samples {
        let mut rng = case_rng(config.seed, i);
        let a = sample::complex_structure(&mut rng, config.n);
        let r = decompose(&a).and_then(|d| {
            let res = d.residuals();
            let mut path: f64 = 0.0;
            for k in 0..=8 {
                path = path.max(d.at(k as f64 / 8.0)?.membership_residual());
            }
            let endpoint = frobenius(&(d.at(1.0)?.matrix() - a.matrix()));
            let worst = res.max().max(path).max(endpoint);
            Ok((
                worst,
                worst <= tol && res.p_min_eigenvalue >= 1.0 - tol,
                json!({ "decomposition": res.max(), "path": path, "spectral_symmetry": res.spectral_symmetry }),
            ))
        });
        cases.push_result("random structure", json!({ "a": mat_json(a.matrix()) }), r);
    }
    cases.records
}

/// Polynomial test field with frame components `a + M y + (y·y) c`.
fn poly_field(a: DVector<f64>, m: DMatrix<f64>, c: DVector<f64>) -> FnField<impl Fn(&DVector<f64>) -> DVector<f64>> {
    let d = a.len();
    FnField::new(d, move |y: &DVector<f64>| &a + &m * y + &c * (0.1 * y.norm_squared()))
}

/// Connection against the projected ambient derivative, metric compatibility,
/// torsion and sectional curvature.
fn check_sphere(config: &RunConfig) -> Vec<CaseRecord> {
    let tol = config.tol();
    let step = config.h().expect("sphere has a step");
    let d = 2 * config.n;
    let mut cases = Cases::new(Check::Sphere, config.seed);
    for i in 0..config.samples {
        let mut rng = case_rng(config.seed, i);
        let y = sample::chart_coords(&mut rng, d, 1.5);
        let x = poly_field(
            sample::gaussian_vector(&mut rng, d),
            sample::gaussian(&mut rng, d, d),
            sample::gaussian_vector(&mut rng, d),
        );
        let z = poly_field(
            sample::gaussian_vector(&mut rng, d),
            sample::gaussian(&mut rng, d, d),
            sample::gaussian_vector(&mut rng, d),
        );
        let u = sample::gaussian_vector(&mut rng, d);
        let v = sample::gaussian_vector(&mut rng, d);
        let inputs = json!({ "y": vec_json(&y) });
        let r = (|| -> Result<(f64, bool, Value)> {
            let p = ChartPoint::new(y.clone())?;
            let conn = connection_oracle_gap(&p)?;
            let compat = compatibility_gap(&x, &z, &p)?;
            let torsion =
                (covariant_derivative(&x, &z, &p)? - covariant_derivative(&z, &x, &p)? - bracket(&x, &z, &p)?).norm();
            let curvature = if d >= 2 {
                (sectional_curvature_with_step(&p, &u, &v, step)? - 1.0).abs()
            } else {
                0.0
            };
            let worst = conn.max(compat).max(torsion);
            Ok((
                worst.max(curvature),
                worst <= tol && curvature <= 1e-4,
                json!({ "connection": conn, "compatibility": compat, "torsion": torsion, "curvature_gap": curvature }),
            ))
        })();
        cases.push_result("random point", inputs, r);
    }
    cases.records
}

/// `max |Γ_ij - ⟨c ∂_i ê_j, ê_k⟩|`: the Levi-Civita connection of the sphere
/// is the tangential part of the ambient derivative.
pub fn connection_oracle_gap(p: &ChartPoint) -> Result<f64> {
    let d = p.dim();
    let e = embed(p).frame_matrix();
    let c = p.conformal_factor();
    let mut worst: f64 = 0.0;
    for i in 0..d {
        let de = frame_coordinate_derivative(p, i) * c;
        for j in 0..d {
            let oracle = e.transpose() * de.column(j);
            let formula = connection_coefficients(p, i + 1, j + 1)?;
            worst = worst.max((oracle - formula).amax());
        }
    }
    Ok(worst)
}

/// `max_l |e_l⟨X,Z⟩ - ⟨∇_{e_l}X, Z⟩ - ⟨X, ∇_{e_l}Z⟩|` with the left side by
/// central differences.
pub fn compatibility_gap(x: &dyn VectorField, z: &dyn VectorField, p: &ChartPoint) -> Result<f64> {
    let d = p.dim();
    let y = p.coords();
    let h = 1e-5;
    let mut worst: f64 = 0.0;
    for l in 0..d {
        let el = crate::spheregeo::FrameField::new(d, l + 1)?;
        let mut yp = y.clone();
        let mut ym = y.clone();
        yp[l] += h;
        ym[l] -= h;
        let lhs = p.conformal_factor()
            * (x.components(&yp).dot(&z.components(&yp)) - x.components(&ym).dot(&z.components(&ym)))
            / (2.0 * h);
        let rhs = covariant_derivative(&el, x, p)?.dot(&z.components(y))
            + x.components(y).dot(&covariant_derivative(&el, z, p)?);
        worst = worst.max((lhs - rhs).abs());
    }
    Ok(worst)
}

fn draw_nijenhuis_field(rng: &mut ChaCha8Rng, n: usize, kind: usize) -> Result<(AcsField, &'static str)> {
    Ok(match kind {
        0 => {
            let b0 = sample::orthogonal_structure(rng, n).into_matrix();
            let gens = (0..2 * n).map(|_| sample::skew(rng, 2 * n)).collect();
            (make_rotated_field(b0, gens, 1.0)?, "rotated")
        }
        1 => {
            let b0 = sample::complex_structure(rng, n).into_matrix();
            let gens = (0..2 * n).map(|_| sample::gaussian(rng, 2 * n, 2 * n)).collect();
            // keep |scale · Σ y^k S_k| of order one across dimensions
            let scale = 0.5 / ((2 * n) as f64).sqrt();
            (make_conjugated_field(b0, gens, scale)?, "conjugated")
        }
        2 => (make_constant_field(sample::orthogonal_structure(rng, n).into_matrix())?, "constant orthogonal"),
        _ => (make_constant_field(sample::complex_structure(rng, n).into_matrix())?, "constant general"),
    })
}

/// Zero/nonzero verdict shared by the Nijenhuis and residual-form comparison.
fn nij_band(v: f64) -> Option<bool> {
    if v <= 1e-8 {
        Some(true)
    } else if v >= 1e-2 {
        Some(false)
    } else {
        None
    }
}

/// Largest entries of `N`, of both residual forms and of the direct/formula gap.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NijenhuisSummary {
    pub agreement: f64,
    pub nijenhuis: f64,
    pub general_form: f64,
    pub orthogonal_form: Option<f64>,
}

impl NijenhuisSummary {
    /// No two quantities sit in opposite bands.
    pub fn bands_agree(&self) -> bool {
        let mut bands = vec![nij_band(self.nijenhuis), nij_band(self.general_form)];
        if let Some(o) = self.orthogonal_form {
            bands.push(nij_band(o));
        }
        let zero = bands.contains(&Some(true));
        let nonzero = bands.contains(&Some(false));
        !(zero && nonzero)
    }
}

pub fn nijenhuis_summary(field: &AcsField, p: &ChartPoint) -> Result<NijenhuisSummary> {
    let d = field.dim();
    let mut s = NijenhuisSummary {
        agreement: 0.0,
        nijenhuis: 0.0,
        general_form: 0.0,
        orthogonal_form: field.is_orthogonal().then_some(0.0),
    };
    for i in 1..=d {
        for j in 1..=d {
            let direct = nijenhuis_direct(field, p, i, j)?;
            let formula = nijenhuis_formula(field, p, i, j)?;
            s.agreement = s.agreement.max((&direct - &formula).amax());
            s.nijenhuis = s.nijenhuis.max(formula.norm());
            s.general_form = s
                .general_form
                .max(integrability_residual(field, p, i, j, ResidualForm::General)?.norm());
            if let Some(o) = s.orthogonal_form.as_mut() {
                *o = o.max(integrability_residual(field, p, i, j, ResidualForm::Orthogonal)?.norm());
            }
        }
    }
    Ok(s)
}

fn check_nijenhuis(config: &RunConfig) -> Vec<CaseRecord> {
    let tol = config.tol();
    let n = config.n;
    let mut cases = Cases::new(Check::Nijenhuis, config.seed);
    for i in 0..config.samples {
        let mut rng = case_rng(config.seed, i);
        let kind = i % 4;
        let drawn = draw_nijenhuis_field(&mut rng, n, kind);
        let y = sample::chart_coords(&mut rng, 2 * n, 1.5);
        let (label, inputs, r) = match drawn {
            Ok((field, label)) => {
                let inputs = json!({ "y": vec_json(&y), "field": field.spec() });
                let r = ChartPoint::new(y).and_then(|p| nijenhuis_summary(&field, &p)).map(|s| {
                    // constant fields and surfaces must be integrable
                    let must_vanish = kind >= 2 || n == 1;
                    let vanish_ok = !must_vanish || s.nijenhuis <= tol;
                    (
                        s.agreement,
                        s.agreement <= tol && s.bands_agree() && vanish_ok,
                        serde_json::to_value(s).expect("summary serializes"),
                    )
                });
                (label, inputs, r)
            }
            Err(e) => ("field", Value::Null, Err(e)),
        };
        cases.push_result(label, inputs, r);
    }
    let mut y = vec![0.0; 2 * n];
    y[0] = 1.0;
    let r = (|| -> Result<(f64, bool, Value)> {
        let field = make_constant_field(ComplexStructure::standard(n)?.into_matrix())?;
        let p = ChartPoint::from_slice(&y)?;
        let mut best: f64 = 0.0;
        let mut at = (0, 0);
        for i in 1..=2 * n {
            for j in i..=2 * n {
                let v = lebrun_symmetry_norm(&field, &p, i, j)?;
                if v > best {
                    best = v;
                    at = (i, j);
                }
            }
        }
        // residual is the shortfall below the required size
        Ok(((1e-3 - best).max(0.0), best > 1e-3, json!({ "max_norm": best, "pair": [at.0, at.1] })))
    })();
    cases.push_result("symmetric (1,0) connection defect", json!({ "y": y }), r);
    cases.records
}

/// Pushforward split and the `π_* J~ f_* = J` identity.
fn check_section(config: &RunConfig) -> Vec<CaseRecord> {
    let h = config.h().expect("section has a step");
    let band = config.tol().max(1e2 * h * h);
    let n = config.n;
    let mut cases = Cases::new(Check::Section, config.seed);
    for i in 0..config.samples {
        let mut rng = case_rng(config.seed, i);
        let drawn = draw_nijenhuis_field(&mut rng, n, i % 4);
        let y = sample::chart_coords(&mut rng, 2 * n, 1.5);
        let x = sample::gaussian_vector(&mut rng, 2 * n);
        let (label, r) = match drawn {
            Ok((field, label)) => {
                let r = ChartPoint::new(y.clone()).and_then(|p| {
                    let split = decomposition_residual(&field, &p, &x, Differentiation::CentralDifference { h })?;
                    let base = lemma33_check(&field, &p, &x)?;
                    let worst = split.max(base);
                    Ok((worst, worst <= band, json!({ "decomposition": split, "base_point": base })))
                });
                (label, r)
            }
            Err(e) => ("field", Err(e)),
        };
        cases.push_result(label, json!({ "y": vec_json(&y), "x": vec_json(&x) }), r);
    }
    cases.records
}

/// Paired sweep: holomorphy of the section against orthogonality plus
/// vanishing of `N`.
fn check_holomorphy(config: &RunConfig) -> Result<(Vec<CaseRecord>, Value)> {
    let mut sweep = SweepConfig::new(config.n, config.samples);
    sweep.zero_band = config.tol();
    sweep.differentiation = Differentiation::CentralDifference {
        h: config.h().expect("holomorphy has a step"),
    };
    let mut rng = case_rng(config.seed, 0);
    let report = equivalence_sweep(&mut rng, &sweep)?;
    let mut cases = Cases::new(Check::Holomorphy, config.seed);
    for s in &report.samples {
        let label = serde_json::to_value(s.kind)?.as_str().unwrap_or_default().replace('_', " ");
        let inputs = json!({ "y": s.y, "kind": s.kind });
        let data = json!({
            "holomorphy": s.holomorphy,
            "orthogonality_defect": s.orthogonality_defect,
            "nijenhuis": s.nijenhuis,
            "predicted_zero": s.predicted_zero,
            "observed_zero": s.observed_zero,
        });
        // distance from the predicted verdict: the residual itself when it
        // should vanish, the shortfall below the nonzero band otherwise
        let residual = if s.predicted_zero {
            s.holomorphy
        } else {
            (sweep.nonzero_band - s.holomorphy).max(0.0)
        };
        cases.push(label, inputs, residual, !s.mismatch(), data);
    }
    if report.unresolved > 0 {
        cases.push(
            "unresolved draws",
            json!({ "unresolved": report.unresolved }),
            f64::INFINITY,
            false,
            Value::Null,
        );
    }
    let summary = json!({
        "mismatches": report.mismatches,
        "redrawn": report.redrawn,
        "unresolved": report.unresolved,
        "zero_band": sweep.zero_band,
        "nonzero_band": sweep.nonzero_band,
    });
    Ok((cases.records, summary))
}

/// Critical values, Hessians at both critical sets and gradient ascent.
fn check_morse(config: &RunConfig) -> Vec<CaseRecord> {
    let tol = config.tol();
    let step = config.h().expect("morse has a step");
    let n = config.n;
    let mut cases = Cases::new(Check::Morse, config.seed);
    for (sign, label) in [(1.0, "top critical set"), (-1.0, "bottom critical set")] {
        let mut rng = case_rng(config.seed, cases.records.len());
        let r = sample::special_orthogonal(&mut rng, 2 * n);
        let res = critical_point(n, sign, Some(&r)).and_then(|a| {
            let value_gap = (morse_h(&a)? - 2.0 * sign).abs();
            let spec = morse_hessian_spectrum(&a)?;
            let eig_gap = spec
                .horizontal
                .iter()
                .map(|v| (v + 2.0 * sign).abs())
                .fold(0.0, f64::max);
            let want_index = if sign > 0.0 { 2 * n } else { 0 };
            let pass = value_gap <= 1e-9 && eig_gap <= tol && spec.fiber_max <= tol && spec.index == want_index;
            Ok((
                eig_gap.max(spec.fiber_max),
                pass,
                json!({ "value_gap": value_gap, "spectrum": spec }),
            ))
        });
        cases.push_result(label, json!({ "rotation": mat_json(&r) }), res);
    }
    let ascent = AscentConfig {
        step,
        ..AscentConfig::default()
    };
    for i in 0..config.samples {
        let idx = cases.records.len();
        let mut rng = case_rng(config.seed, idx);
        let r = random_state(&mut rng, n);
        let inputs = r.as_ref().map_or(Value::Null, |a| mat_json(a.matrix()));
        let res = r.and_then(|a| gradient_ascent(&a, &ascent)).map(|o| {
            let gap = 2.0 - o.final_h;
            (gap.abs(), o.stopped && gap.abs() <= 1e-6, serde_json::to_value(o).expect("outcome serializes"))
        });
        cases.push_result(format!("ascent seed {i}"), inputs, res);
    }
    cases.records
}

/// `(-2)^{n+1}/(n-1)!` straight from integers, as an oracle for the chain
/// through Newton's identities.
pub fn signature_index_closed_form(n: usize) -> Rational {
    let num = BigInt::from(-2).pow(n as u32 + 1);
    let den: BigInt = (1..n).fold(BigInt::from(1), |acc, k| acc * BigInt::from(k));
    Rational::from_big(num, den).expect("nonzero factorial")
}

fn exact_case(cases: &mut Cases, label: String, inputs: Value, got: Result<Rational>, want: Rational, extra: Value) {
    let r = got.map(|g| {
        let ok = g == want;
        let mut data = json!({ "value": g, "expected": want });
        if let (Value::Object(d), Value::Object(e)) = (&mut data, extra) {
            d.extend(e);
        }
        (if ok { 0.0 } else { 1.0 }, ok, data)
    });
    cases.push_result(label, inputs, r);
}

fn check_index(config: &RunConfig) -> Vec<CaseRecord> {
    let mut cases = Cases::new(Check::Index, config.seed);
    for k in 1..=10usize {
        let sign = if k % 2 == 1 { 1 } else { -1 };
        exact_case(
            &mut cases,
            format!("newton p_{k} / e_{k}"),
            json!({ "n": k }),
            newton_chern_identity(k),
            Rational::integer(sign * k as i64),
            json!({ "ch_coefficient": chern_character_coefficient(k).ok() }),
        );
    }
    let mut ns: Vec<usize> = (2..=12).collect();
    if config.n >= 2 && !ns.contains(&config.n) {
        ns.push(config.n);
    }
    for k in ns {
        let got = signature_index(k);
        let integral = got.as_ref().map(|v| v.integral).unwrap_or(false);
        exact_case(
            &mut cases,
            format!("signature index n={k}"),
            json!({ "n": k }),
            got.map(|v| v.value),
            signature_index_closed_form(k),
            json!({ "integral": integral, "requested": k == config.n }),
        );
    }
    let dol = dolbeault_index_s4();
    exact_case(
        &mut cases,
        "dolbeault index S^4".into(),
        json!({}),
        Ok(dol.value.clone()),
        Rational::new(1, 6).expect("nonzero"),
        json!({ "integral": dol.integral }),
    );
    cases.records
}

fn check_poincare(config: &RunConfig) -> Vec<CaseRecord> {
    let mut cases = Cases::new(Check::Poincare, config.seed);
    let n = config.n;
    let r = poincare_polynomial(n).map(|p| {
        let at_one = p.eval(1);
        let want = 1i64.checked_shl(n as u32);
        let ok = p.degree() == Some(n * (n + 1)) && at_one.is_some() && at_one == want;
        (
            if ok { 0.0 } else { 1.0 },
            ok,
            json!({ "coefficients": p.coefficients(), "value_at_one": at_one }),
        )
    });
    cases.push_result(format!("P_t n={n}"), json!({ "n": n }), r);
    for k in 1..=n.max(8) {
        let r = poincare_recursion_holds(k).map(|ok| (if ok { 0.0 } else { 1.0 }, ok, Value::Null));
        cases.push_result(format!("recursion n={k}"), json!({ "n": k }), r);
    }
    cases.records
}
