//! Salamon-notation grammar and the `.alg` record format.
//!
//! An entry is `0` or a signed sum of terms. A term is a `*`-joined list of
//! factors ending in an index group; factors are rationals `p` or `p/q` and,
//! when a parameter table is supplied, parameter names such as `lambda`, `mu`,
//! `k` (the aliases `λ`, `μ` are accepted). Index groups are juxtaposed digits
//! below dimension 10 and dot-separated integers from 10 on.

use std::collections::BTreeMap;

use crate::exalg::{KForm, Matrix, Scalar};
use crate::Error;

/// Named rational parameters substituted while parsing.
pub type Params = BTreeMap<String, Scalar>;

fn canonical_param(name: &str) -> &str {
    match name {
        "λ" => "lambda",
        "μ" => "mu",
        other => other,
    }
}

fn perr(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

/// Parse `name=value` pairs separated by commas, e.g. `λ=1,μ=-3,k=1/2`.
pub fn parse_params(text: &str) -> Result<Params, Error> {
    let mut out = Params::new();
    let mut offset = 0;
    for part in text.split(',') {
        let here = offset;
        offset += part.len() + 1;
        if part.trim().is_empty() {
            continue;
        }
        let (k, v) = part.split_once('=').ok_or_else(|| perr(here, "expected name=value"))?;
        let k = canonical_param(k.trim());
        if !k.starts_with(char::is_alphabetic) || !k.chars().all(|c| c.is_alphanumeric() || c == '_') {
            return Err(perr(here, format!("bad parameter name {k:?}")));
        }
        let v: Scalar = v.trim().parse().map_err(|_| perr(here + part.find('=').unwrap_or(0) + 1, "bad rational"))?;
        out.insert(k.to_string(), v);
    }
    Ok(out)
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
    base: usize,
}

impl<'a> Lexer<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn abs(&self) -> usize {
        self.base + self.pos
    }

    /// A maximal run of digits, letters, `.`, `/`, `_`.
    fn word(&mut self) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_alphanumeric() || c == '.' || c == '/' || c == '_' {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        &self.src[start..self.pos]
    }
}

fn index_group(word: &str, dim: usize, pos: usize) -> Result<Vec<usize>, Error> {
    let idx: Vec<usize> = if dim >= 10 {
        word.split('.')
            .map(|p| p.parse::<usize>().map_err(|_| perr(pos, format!("bad index group {word:?}"))))
            .collect::<Result<_, _>>()?
    } else {
        if !word.bytes().all(|b| b.is_ascii_digit()) {
            return Err(perr(pos, format!("bad index group {word:?}")));
        }
        word.bytes().map(|b| (b - b'0') as usize).collect()
    };
    if let Some(&bad) = idx.iter().find(|&&i| i == 0 || i > dim) {
        return Err(Error::IndexOutOfRange { index: bad, dim });
    }
    Ok(idx)
}

/// Parse one entry (a form) at byte offset `base` of the enclosing text.
pub fn parse_form(text: &str, dim: usize, params: Option<&Params>, base: usize) -> Result<KForm, Error> {
    let mut lx = Lexer { src: text, pos: 0, base };
    let mut out = KForm::zero(dim);
    lx.skip_ws();
    if lx.peek().is_none() {
        return Err(perr(lx.abs(), "empty entry"));
    }
    let mut first = true;
    loop {
        lx.skip_ws();
        let mut sign = Scalar::one();
        match lx.peek() {
            Some('+') if !first => lx.pos += 1,
            Some('-') => {
                lx.pos += 1;
                sign = Scalar::int(-1);
            }
            Some(_) if first => {}
            Some(c) => return Err(perr(lx.abs(), format!("expected '+' or '-', found {c:?}"))),
            None => break,
        }
        first = false;
        let mut coeff = sign;
        loop {
            lx.skip_ws();
            let at = lx.abs();
            let w = lx.word();
            if w.is_empty() {
                return Err(perr(at, "expected a coefficient or index group"));
            }
            lx.skip_ws();
            if lx.peek() == Some('*') {
                lx.pos += 1;
                coeff = coeff * factor(w, params, at)?;
                continue;
            }
            if w == "0" {
                // a literal zero term contributes nothing
                break;
            }
            let idx = index_group(w, dim, at)?;
            out.add_scaled(&KForm::basis(dim, &idx), &coeff);
            break;
        }
    }
    Ok(out)
}

fn factor(w: &str, params: Option<&Params>, pos: usize) -> Result<Scalar, Error> {
    if w.starts_with(|c: char| c.is_ascii_digit()) {
        return w.parse().map_err(|_| perr(pos, format!("bad coefficient {w:?}")));
    }
    let name = canonical_param(w);
    match params {
        Some(p) => p.get(name).cloned().ok_or_else(|| perr(pos, format!("unknown parameter {w:?}"))),
        None => Err(perr(pos, format!("parameter {w:?} needs a value"))),
    }
}

/// Split a comma list of entries, keeping byte offsets.
fn entries(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in text.char_indices() {
        if c == ',' {
            out.push((start, &text[start..i]));
            start = i + 1;
        }
    }
    out.push((start, &text[start..]));
    out
}

/// Parse a full tuple; the dimension is the entry count.
pub fn parse_tuple(text: &str, params: Option<&Params>) -> Result<Vec<KForm>, Error> {
    let es = entries(text);
    let dim = es.len();
    if dim > crate::exalg::MAX_DIM {
        return Err(perr(0, "too many entries"));
    }
    es.into_iter().map(|(off, e)| parse_form(e, dim, params, off)).collect()
}

/// One record of an `.alg` file.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AlgRecord {
    pub name: Option<String>,
    pub dim: Option<usize>,
    pub family: Option<usize>,
    /// Salamon text of the seven-dimensional factor in a Table 1 style record.
    pub h: Option<String>,
    /// Either a `salamon:` line or `d e^K =` lines, kept as text so that
    /// parameters can be substituted later.
    pub salamon: Option<String>,
    pub d_lines: BTreeMap<usize, (usize, String)>,
    pub coframe: Option<Matrix>,
    /// Byte offset of the structure-constant text in the source.
    pub body_offset: usize,
}

impl AlgRecord {
    pub fn uses_params(&self) -> bool {
        let has_alpha = |s: &str| s.chars().any(|c| c.is_alphabetic());
        self.salamon.as_deref().is_some_and(has_alpha) || self.d_lines.values().any(|(_, s)| has_alpha(s))
    }

    /// Structure constants with parameters substituted.
    pub fn forms(&self, params: Option<&Params>) -> Result<Vec<KForm>, Error> {
        if let Some(s) = &self.salamon {
            let mut out = parse_tuple_at(s, params, self.body_offset)?;
            if let Some(d) = self.dim {
                if d != out.len() {
                    return Err(perr(self.body_offset, format!("dim {d} but {} entries", out.len())));
                }
            }
            out.shrink_to_fit();
            return Ok(out);
        }
        let dim = self.dim.or_else(|| self.d_lines.keys().max().copied()).ok_or_else(|| perr(0, "no structure constants"))?;
        if let Some(&k) = self.d_lines.keys().find(|&&k| k == 0 || k > dim) {
            return Err(Error::IndexOutOfRange { index: k, dim });
        }
        (1..=dim)
            .map(|k| match self.d_lines.get(&k) {
                Some((off, t)) => parse_form(t, dim, params, *off),
                None => Ok(KForm::zero(dim)),
            })
            .collect()
    }
}

fn parse_tuple_at(text: &str, params: Option<&Params>, base: usize) -> Result<Vec<KForm>, Error> {
    let es = entries(text);
    let dim = es.len();
    es.into_iter().map(|(off, e)| parse_form(e, dim, params, base + off)).collect()
}

/// Parse an `.alg` file: records separated by blank lines, `key: value` lines.
/// A `coframe:` value lists matrix rows separated by `;`.
pub fn parse_records(text: &str) -> Result<Vec<AlgRecord>, Error> {
    let mut out = Vec::new();
    let mut cur: Option<AlgRecord> = None;
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let line_start = offset;
        offset += line.len();
        let body = line.trim_end_matches(['\n', '\r']);
        let trimmed = body.trim();
        if trimmed.is_empty() {
            if let Some(r) = cur.take() {
                out.push(r);
            }
            continue;
        }
        if trimmed.starts_with('#') {
            continue;
        }
        let rec = cur.get_or_insert_with(AlgRecord::default);
        let lead = body.len() - body.trim_start().len();
        if let Some(rest) = trimmed.strip_prefix("d e^") {
            let (k, expr) = rest.split_once('=').ok_or_else(|| perr(line_start, "expected 'd e^K = expr'"))?;
            let k: usize = k.trim().parse().map_err(|_| perr(line_start + lead + 4, "bad index after e^"))?;
            let eq = body.find('=').unwrap_or(0);
            rec.d_lines.insert(k, (line_start + eq + 1, expr.to_string()));
            continue;
        }
        let (key, value) = trimmed.split_once(':').ok_or_else(|| perr(line_start + lead, "expected 'key: value'"))?;
        let vstart = line_start + body.find(':').unwrap_or(0) + 1;
        let value_t = value.trim();
        match key.trim() {
            "name" => rec.name = Some(value_t.to_string()),
            "dim" => rec.dim = Some(value_t.parse().map_err(|_| perr(vstart, "bad dim"))?),
            "family" => rec.family = Some(value_t.parse().map_err(|_| perr(vstart, "bad family number"))?),
            "h" => rec.h = Some(value_t.to_string()),
            "salamon" => {
                rec.salamon = Some(value.to_string());
                rec.body_offset = vstart;
            }
            "coframe" => rec.coframe = Some(parse_matrix(value_t, vstart)?),
            other => return Err(perr(line_start + lead, format!("unknown key {other:?}"))),
        }
    }
    if let Some(r) = cur.take() {
        out.push(r);
    }
    Ok(out)
}

/// Rows separated by `;`, entries by whitespace or commas.
pub fn parse_matrix(text: &str, base: usize) -> Result<Matrix, Error> {
    let mut rows = Vec::new();
    for row in text.split(';') {
        if row.trim().is_empty() {
            continue;
        }
        let r: Vec<Scalar> = row
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| perr(base, format!("bad matrix entry {t:?}"))))
            .collect::<Result<_, _>>()?;
        rows.push(r);
    }
    let c = rows.first().map_or(0, |r| r.len());
    if rows.iter().any(|r| r.len() != c) || rows.len() != c {
        return Err(perr(base, "coframe must be a square matrix"));
    }
    Ok(Matrix::from_rows(rows))
}
