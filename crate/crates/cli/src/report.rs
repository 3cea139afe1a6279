//! JSON report types. Tensors and rationals travel as canonical strings so no
//! value passes through a float.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use paratorsion::analysis::Analysis;
use paratorsion::liealg::JacobiReport;
use paratorsion::pstruct::Structure;
use paratorsion::search::{FamilyChecks, NhConditions, SearchReport, WitnessOutcome};
use paratorsion::LieAlgebra;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSummary {
    pub name: Option<String>,
    pub salamon: String,
    pub dim: usize,
    pub jacobi: bool,
    /// `d(de^K)` for the first failing `K`.
    pub jacobi_witness: Option<String>,
    pub nilpotent: bool,
    pub unimodular: bool,
}

impl AlgebraSummary {
    pub fn new(l: &LieAlgebra) -> Self {
        let JacobiReport { ok, witness } = l.check_jacobi();
        let flags = l.flags();
        AlgebraSummary {
            name: l.name().map(str::to_string),
            salamon: l.to_salamon(),
            dim: l.dim(),
            jacobi: ok,
            jacobi_witness: witness.map(|(k, w)| format!("d(de^{k}) = {w}")),
            nilpotent: flags.nilpotent,
            unimodular: flags.unimodular,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionSummary {
    /// Formal sum such as `W1+W5`, or `0`.
    pub class: String,
    pub labels: Vec<String>,
    /// `tau1`..`tau8`, zero components included.
    pub components: BTreeMap<String, String>,
    pub lambda: String,
    pub nh: String,
    pub nv: String,
    pub paracomplex: bool,
    pub parakahler: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurvatureSummary {
    pub flat: bool,
    pub ricci_flat: bool,
    /// The Einstein constant when `ric = s·g`.
    pub einstein: Option<String>,
    pub s: String,
    pub riemann: String,
    pub ric: String,
    pub ric_prime: String,
    pub ric_s2v: String,
    pub ric_s2v_star: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AgreementSummary {
    pub all: bool,
    pub ric_prime: bool,
    pub ric_s2v: bool,
    pub ric_s2v_star: bool,
    pub scalar: bool,
    pub round_trip: bool,
    pub nijenhuis_h: bool,
    pub nijenhuis_v: bool,
    pub connection: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub version: String,
    /// Rows of the adapted coframe in the input one.
    pub coframe: String,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub algebra: AlgebraSummary,
    pub torsion: TorsionSummary,
    pub curvature: CurvatureSummary,
    pub agreement: AgreementSummary,
    pub meta: Meta,
}

pub fn matrix_text(m: &paratorsion::Matrix) -> String {
    m.to_rows().iter().map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>().join("; ")
}

impl AnalyzeReport {
    pub fn new(s: &Structure, a: &Analysis, elapsed_ms: u64) -> Self {
        let n = s.n();
        let dim = s.dim();
        let components = (1..=8).map(|i| (format!("tau{i}"), a.torsion.tau(i).to_string())).collect();
        let g = &a.agreement;
        let c = &a.curvature;
        AnalyzeReport {
            algebra: AlgebraSummary::new(s.original()),
            torsion: TorsionSummary {
                class: a.class.to_string(),
                labels: a.class.labels(),
                components,
                lambda: a.torsion.lambda.to_string(),
                nh: a.nh.to_string(),
                nv: a.nv.to_string(),
                paracomplex: a.paracomplex(),
                parakahler: a.parakahler(),
            },
            curvature: CurvatureSummary {
                flat: a.predicates.flat,
                ricci_flat: a.predicates.ricci_flat,
                einstein: a.predicates.einstein.as_ref().map(|e| e.to_string()),
                s: c.s.to_string(),
                riemann: c.riemann.form.to_string(),
                ric: c.ric_text(),
                ric_prime: c.ric_prime.to_string(),
                ric_s2v: c.ric_s2v.bilinear_text(n, dim),
                ric_s2v_star: c.ric_s2v_star.bilinear_text(0, dim),
            },
            agreement: AgreementSummary {
                all: g.all(),
                ric_prime: g.ric_prime,
                ric_s2v: g.ric_s2v,
                ric_s2v_star: g.ric_s2v_star,
                scalar: g.scalar,
                round_trip: g.round_trip,
                nijenhuis_h: g.nijenhuis_h,
                nijenhuis_v: g.nijenhuis_v,
                connection: g.connection,
            },
            meta: Meta { version: env!("CARGO_PKG_VERSION").into(), coframe: matrix_text(s.coframe()), elapsed_ms },
        }
    }

    /// Human-readable form.
    pub fn text(&self) -> String {
        let a = &self.algebra;
        let t = &self.torsion;
        let c = &self.curvature;
        let mut out = String::new();
        let mut line = |k: &str, v: &str| out.push_str(&format!("{k:<12}{v}\n"));
        let mut flags = vec![format!("dim {}", a.dim)];
        flags.extend(a.nilpotent.then(|| "nilpotent".to_string()));
        flags.extend(a.unimodular.then(|| "unimodular".to_string()));
        line("algebra", &format!("({})  {}", a.salamon, flags.join(", ")));
        if let Some(n) = &a.name {
            line("name", n);
        }
        let mut cls = t.class.clone();
        if t.parakahler {
            cls.push_str("  (parakähler)");
        } else if t.paracomplex {
            cls.push_str("  (paracomplex)");
        }
        line("class", &cls);
        for (k, v) in &t.components {
            if v != "0" {
                line(k, v);
            }
        }
        line("lambda", &t.lambda);
        line("N^H", &t.nh);
        line("N^V", &t.nv);
        let mut cf = vec![if c.flat { "flat" } else { "not flat" }.to_string()];
        cf.push(if c.ricci_flat { "Ricci-flat" } else { "not Ricci-flat" }.into());
        if let Some(e) = &c.einstein {
            cf.push(format!("Einstein, s = {e}"));
        }
        line("curvature", &cf.join(", "));
        line("riemann", &c.riemann);
        line("ric", &c.ric);
        line("ric'", &c.ric_prime);
        line("s", &c.s);
        let ag = &self.agreement;
        line("agreement", if ag.all { "formulas match the Levi-Civita oracle" } else { "MISMATCH" });
        line("time", &format!("{} ms", self.meta.elapsed_ms));
        out
    }

    pub fn failed_checks(&self) -> Vec<&'static str> {
        let g = &self.agreement;
        [
            ("ric_prime", g.ric_prime),
            ("ric_s2v", g.ric_s2v),
            ("ric_s2v_star", g.ric_s2v_star),
            ("scalar", g.scalar),
            ("round_trip", g.round_trip),
            ("nijenhuis_h", g.nijenhuis_h),
            ("nijenhuis_v", g.nijenhuis_v),
            ("connection", g.connection),
        ]
        .into_iter()
        .filter_map(|(k, ok)| (!ok).then_some(k))
        .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionSummary {
    pub rank: usize,
    pub rank3: bool,
    pub simple_image: bool,
    pub non_simple_witness: Option<String>,
    pub no_common_factor: bool,
    pub common_factor: Option<String>,
    pub dbeta_type_ok: bool,
}

impl From<&NhConditions> for ConditionSummary {
    fn from(c: &NhConditions) -> Self {
        ConditionSummary {
            rank: c.rank,
            rank3: c.rank3,
            simple_image: c.simple_image,
            non_simple_witness: c.non_simple_witness.as_ref().map(|w| w.to_string()),
            no_common_factor: c.no_common_factor,
            common_factor: c.common_factor.as_ref().map(|w| w.to_string()),
            dbeta_type_ok: c.dbeta_type_ok,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessSummary {
    pub f: String,
    pub class: String,
    pub ricci_flat: bool,
    pub flat: bool,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateSummary {
    pub index: usize,
    /// Rows `v_1..v_n; h_1..h_n` in the input frame.
    pub splitting: String,
    pub conditions: ConditionSummary,
    pub adapted_coframe: Option<String>,
    pub f_space: Vec<String>,
    /// `found`, `inconclusive` or `empty`.
    pub witness_outcome: String,
    pub examined: Option<usize>,
    pub witnesses: Vec<WitnessSummary>,
    pub success: bool,
}

impl CandidateSummary {
    pub fn new(index: usize, r: &SearchReport) -> Self {
        let rows: Vec<Vec<paratorsion::Scalar>> =
            r.candidate.v_basis().iter().chain(r.candidate.h_basis()).cloned().collect();
        let (outcome, examined) = match &r.witnesses {
            WitnessOutcome::Found(_) => ("found", None),
            WitnessOutcome::Inconclusive { examined } => ("inconclusive", Some(*examined)),
            WitnessOutcome::Empty => ("empty", None),
        };
        CandidateSummary {
            index,
            splitting: matrix_text(&paratorsion::Matrix::from_rows(rows)),
            conditions: (&r.conditions).into(),
            adapted_coframe: r.adapted_coframe.as_ref().map(matrix_text),
            f_space: r.f_space.iter().map(|f| f.to_string()).collect(),
            witness_outcome: outcome.into(),
            examined,
            witnesses: r
                .verification
                .iter()
                .map(|w| WitnessSummary {
                    f: w.f.to_string(),
                    class: w.analysis.class.to_string(),
                    ricci_flat: w.analysis.predicates.ricci_flat,
                    flat: w.analysis.predicates.flat,
                    ok: w.ok(),
                })
                .collect(),
            success: r.success(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySummary {
    pub family: usize,
    pub jacobi: bool,
    pub nilpotent: bool,
    pub class_w1: bool,
    pub tau1_nonzero: bool,
    pub ricci_flat_oracle: bool,
    pub ricci_flat_formula: bool,
    pub riemann_nonzero: bool,
    pub all: bool,
}

impl FamilySummary {
    pub fn new(family: usize, c: &FamilyChecks) -> Self {
        FamilySummary {
            family,
            jacobi: c.jacobi,
            nilpotent: c.nilpotent,
            class_w1: c.class_w1,
            tau1_nonzero: c.tau1_nonzero,
            ricci_flat_oracle: c.ricci_flat_oracle,
            ricci_flat_formula: c.ricci_flat_formula,
            riemann_nonzero: c.riemann_nonzero,
            all: c.all(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSummary {
    pub algebra: AlgebraSummary,
    /// Checks on the record's printed coframe, for Table 1 style inputs.
    pub family: Option<FamilySummary>,
    pub candidates: Vec<CandidateSummary>,
    /// The candidate list was cut at the enumeration cap.
    pub truncated: bool,
    pub successes: usize,
    pub meta: Meta,
}
