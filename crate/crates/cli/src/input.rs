//! Turning a command-line argument into a Lie algebra.
//!
//! An argument is tried, in order, as `abelian` / `abelian-<dim>`, a corpus
//! name, a path to an `.alg` file, the bundled `table1.alg`, and finally an
//! inline Salamon string.

use std::path::Path;

use paratorsion::corpus::{self, Table1Family};
use paratorsion::exalg::Matrix;
use paratorsion::liealg::{parse_records, AlgRecord, Params};
use paratorsion::pstruct::Structure;
use paratorsion::{Error, LieAlgebra};

use crate::CliError;

/// `abelian` without a dimension means the four-dimensional one.
const ABELIAN_DEFAULT_DIM: usize = 4;

#[derive(Debug, Clone)]
pub struct Resolved {
    pub algebra: LieAlgebra,
    /// Coframe given in the record, if any.
    pub coframe: Option<Matrix>,
    pub family: Option<usize>,
}

pub fn resolve(arg: &str, family: Option<usize>, params: Option<&Params>) -> Result<Resolved, CliError> {
    let plain = |algebra| Ok(Resolved { algebra, coframe: None, family: None });
    if arg == "abelian" {
        return plain(LieAlgebra::abelian(ABELIAN_DEFAULT_DIM).with_name("abelian"));
    }
    if let Some(d) = arg.strip_prefix("abelian-").and_then(|d| d.parse().ok()) {
        return plain(LieAlgebra::abelian(d).with_name(arg));
    }
    if let Some(e) = corpus::full_corpus().into_iter().find(|e| e.name == arg) {
        return plain(e.algebra.with_name(arg));
    }
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: arg.into(), source })?;
        return from_records(&text, family, params);
    }
    if path.file_name().is_some_and(|f| f == "table1.alg") {
        return from_records(corpus::TABLE1_ALG, family, params);
    }
    if arg.ends_with(".alg") {
        let source = std::io::Error::new(std::io::ErrorKind::NotFound, "no such file");
        return Err(CliError::Io { path: arg.into(), source });
    }
    let l = match params {
        Some(p) => LieAlgebra::parse_with(arg, p)?,
        None => LieAlgebra::parse_salamon(arg)?,
    };
    plain(l)
}

fn from_records(text: &str, family: Option<usize>, params: Option<&Params>) -> Result<Resolved, CliError> {
    let records = parse_records(text)?;
    let rec = match family {
        Some(k) => records
            .iter()
            .find(|r| r.family == Some(k))
            .ok_or_else(|| CliError::Core(Error::Precondition(format!("no record with family {k}"))))?,
        None if records.len() == 1 => &records[0],
        None => {
            let names: Vec<String> = records.iter().map(record_label).collect();
            return Err(CliError::Usage(format!("file holds {} records ({}); pick one with --family", records.len(), names.join(", "))));
        }
    };
    let algebra = record_algebra(rec, params)?;
    Ok(Resolved { algebra, coframe: rec.coframe.clone(), family: rec.family })
}

fn record_label(r: &AlgRecord) -> String {
    match (&r.name, r.family) {
        (Some(n), _) => n.clone(),
        (None, Some(k)) => format!("family {k}"),
        _ => "unnamed".into(),
    }
}

fn record_algebra(rec: &AlgRecord, params: Option<&Params>) -> Result<LieAlgebra, CliError> {
    if rec.uses_params() && params.is_none() {
        return Err(Error::Precondition("this record has parameters; pass --params".into()).into());
    }
    let l = match (rec.family, &rec.salamon, params) {
        // family templates carry the nonzero λ, μ rule and k defaulting to 0
        (Some(family), Some(s), Some(p)) => {
            Table1Family { family, h: rec.h.clone().unwrap_or_default(), template: s.trim().to_string() }.algebra(p)?
        }
        _ => LieAlgebra::from_d1(rec.forms(params)?)?,
    };
    Ok(match &rec.name {
        Some(n) => l.with_name(n.clone()),
        None => l,
    })
}

/// `standard`, `neg-V`, or matrix rows separated by `;`.
pub fn coframe(choice: &str, dim: usize) -> Result<Matrix, CliError> {
    match choice {
        "standard" => Ok(Matrix::identity(dim)),
        "neg-V" => Ok(Structure::neg_v_coframe(dim)),
        rows => {
            let m = paratorsion::liealg::parse_matrix(rows, 0)?;
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch(m.rows(), dim).into());
            }
            Ok(m)
        }
    }
}
