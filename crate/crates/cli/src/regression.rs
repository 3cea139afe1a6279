//! The worked-example regression behind `paratorsion corpus`: printed facts
//! for the small examples, the Einstein constants, the Table 1 families, and
//! formula/oracle agreement on every corpus algebra.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use paratorsion::analysis::{analyze, Analysis};
use paratorsion::corpus;
use paratorsion::pstruct::Structure;
use paratorsion::search::verify_family;
use paratorsion::torsion::TorsionClass;
use paratorsion::{LieAlgebra, Scalar};

/// What the worked examples state about one algebra. `None` means no claim.
struct Expect {
    salamon: &'static str,
    class: Option<&'static [usize]>,
    parakahler: bool,
    flat: Option<bool>,
    ricci_flat: Option<bool>,
    paracomplex: Option<bool>,
    riemann: Option<&'static str>,
    ric: Option<&'static str>,
    tau: &'static [(usize, &'static str)],
}

const NONE: Expect = Expect {
    salamon: "",
    class: None,
    parakahler: false,
    flat: None,
    ricci_flat: None,
    paracomplex: None,
    riemann: None,
    ric: None,
    tau: &[],
};

const PRINTED: &[Expect] = &[
    Expect { salamon: "0,0,0,12", class: Some(&[2]), flat: Some(true), ricci_flat: Some(true), paracomplex: Some(false), ..NONE },
    Expect { salamon: "24,0,0,0,0,35", parakahler: true, ricci_flat: Some(true), riemann: Some("-34|34"), ..NONE },
    Expect {
        salamon: "0,0,46,0,12,0",
        class: Some(&[2, 6]),
        ricci_flat: Some(true),
        riemann: Some("26|26"),
        tau: &[(2, "2|12"), (6, "6|46")],
        ..NONE
    },
    Expect { salamon: "0,0,0,0,0,45", class: Some(&[3]), flat: Some(true), ..NONE },
    Expect { salamon: "0,0,0,0,0,0,56,57", class: Some(&[3]), ricci_flat: Some(true), riemann: Some("-1/4*45|56-1/4*56|45"), ..NONE },
    Expect { salamon: "0,0,0,0,45,46", ric: Some("-4|4"), ..NONE },
    Expect { salamon: "-14,0,0,0,45,46", ric: Some("4|4"), ..NONE },
    Expect { salamon: "0,0,0,-1/3*23,-1/3*31,-1/3*12", class: Some(&[1]), flat: Some(true), ..NONE },
];

/// Einstein constants of `(14,25,36,t·14,t·25,t·36)`, frozen from the oracle.
pub const EINSTEIN_S: [(i64, i64); 4] = [(-1, -2), (0, 0), (1, 2), (2, 4)];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Line {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

fn check_printed(e: &Expect, a: &Analysis) -> Vec<String> {
    let mut bad = Vec::new();
    let mut want = |ok: bool, what: String| {
        if !ok {
            bad.push(what)
        }
    };
    if let Some(c) = e.class {
        want(a.class == TorsionClass::from_flags(c), format!("class {}", a.class));
    }
    if e.parakahler {
        want(a.parakahler(), format!("class {} is not parakähler", a.class));
    }
    let p = &a.predicates;
    let opt = |x: Option<bool>, y: bool| x.map_or(true, |x| x == y);
    want(opt(e.flat, p.flat), format!("flat = {}", p.flat));
    want(opt(e.ricci_flat, p.ricci_flat), format!("ricci_flat = {}", p.ricci_flat));
    want(opt(e.paracomplex, a.paracomplex()), format!("paracomplex = {}", a.paracomplex()));
    if let Some(r) = e.riemann {
        let got = a.curvature.riemann.form.to_string();
        want(got == r, format!("riemann {got}"));
    }
    if let Some(r) = e.ric {
        let got = a.curvature.ric_text();
        want(got == r, format!("ric {got}"));
    }
    for &(i, t) in e.tau {
        let got = a.torsion.tau(i).to_string();
        want(got == t, format!("tau{i} {got}"));
    }
    bad
}

fn line(name: impl Into<String>, bad: Vec<String>, ok_detail: impl Into<String>) -> Line {
    let ok = bad.is_empty();
    Line { name: name.into(), ok, detail: if ok { ok_detail.into() } else { bad.join("; ") } }
}

fn run(l: &LieAlgebra) -> Result<Analysis, String> {
    let s = Structure::standard(l).map_err(|e| e.to_string())?;
    analyze(&s).map_err(|e| e.to_string())
}

fn printed(e: &Expect) -> Line {
    let name = format!("({})", e.salamon);
    match LieAlgebra::parse_salamon(e.salamon).map_err(|x| x.to_string()).and_then(|l| run(&l)) {
        Ok(a) => line(name, check_printed(e, &a), format!("class {}", a.class)),
        Err(m) => line(name, vec![m], ""),
    }
}

fn einstein(t: i64, s: i64) -> Line {
    let name = format!("einstein t={t}");
    match run(&corpus::einstein_family(t)) {
        Ok(a) => {
            let want = Scalar::int(s);
            let mut bad = Vec::new();
            if a.predicates.einstein.as_ref() != Some(&want) {
                bad.push(format!("oracle einstein {:?}", a.predicates.einstein.map(|x| x.to_string())));
            }
            if a.formulas.s != want {
                bad.push(format!("formula s {}", a.formulas.s));
            }
            line(name, bad, format!("s = {s}"))
        }
        Err(m) => line(name, vec![m], ""),
    }
}

fn agreement(name: &str, l: &LieAlgebra) -> Line {
    match run(l) {
        Ok(a) => {
            let bad = a.agreement.failures().into_iter().map(|f| format!("{f} disagrees")).collect();
            line(name, bad, format!("class {}", a.class))
        }
        Err(m) => line(name, vec![m], ""),
    }
}

fn family(row: usize, p: &paratorsion::liealg::Params) -> Line {
    let label = p.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(",");
    let name = format!("table1 row {row} {label}");
    match verify_family(row, p) {
        Ok(r) => {
            let c = &r.checks;
            let bad = [
                ("nilpotent", c.nilpotent),
                ("class W1", c.class_w1),
                ("tau1 != 0", c.tau1_nonzero),
                ("oracle Ricci-flat", c.ricci_flat_oracle),
                ("formula Ricci-flat", c.ricci_flat_formula),
                ("Riemann != 0", c.riemann_nonzero),
            ]
            .into_iter()
            .filter(|(_, ok)| !ok)
            .map(|(k, _)| format!("{k} fails"))
            .collect();
            line(name, bad, "W1, Ricci-flat, not flat")
        }
        Err(e) => line(name, vec![e.to_string()], ""),
    }
}

/// All regression lines, in a fixed order. Work runs in parallel.
pub fn run_all() -> Vec<Line> {
    enum Job {
        Printed(usize),
        Einstein(i64, i64),
        Family(usize, paratorsion::liealg::Params),
        Agree(String, LieAlgebra),
    }
    let mut jobs: Vec<Job> = (0..PRINTED.len()).map(Job::Printed).collect();
    jobs.extend(EINSTEIN_S.iter().map(|&(t, s)| Job::Einstein(t, s)));
    for p in corpus::table1_samples() {
        jobs.extend((1..=5).map(|r| Job::Family(r, p.clone())));
    }
    jobs.extend(corpus::full_corpus().into_iter().map(|e| Job::Agree(e.name, e.algebra)));
    jobs.into_par_iter()
        .map(|j| match j {
            Job::Printed(i) => printed(&PRINTED[i]),
            Job::Einstein(t, s) => einstein(t, s),
            Job::Family(r, p) => family(r, &p),
            Job::Agree(n, l) => agreement(&n, &l),
        })
        .collect()
}
