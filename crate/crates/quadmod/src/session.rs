//! Batch session front end: parse a line-oriented session file defining
//! rings, modules, maps and presentations; run computations and verifiers;
//! emit a deterministic report suitable for golden-file testing.
//!
//! Grammar (one statement per line, `#` starts a comment):
//!   seed <n>
//!   ring <name> = Z | Zmod <n> | monogenic [c0,...] | product <R> <S>
//!   module <name> over <ring> gens <g> rels [[(..),..],..]
//!   map <name> over <ring> arity <m> <n> = [poly, ...]
//!   presentation <name> over <ring> vars [X,..] rels [poly,..] images [(..),..]
//!   compute <fn> <name>        fn ∈ invariants|sym2|lambda2|gamma2|p2|k|kprime|i2
//!   verify <token> <name>      token ∈ sequence names | presred | relrho
//!   analyze <map> | decompose <map> [r=(..)] [bound=<n>] | factor <map>
//!   print report

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::functors::{
    functor_object_with_i2, verify_with_suite, FunctorTag, QuadSuite, SequenceName,
    SequenceReport,
};
use crate::i2::{i2_ideal, i2_presented, rho_samples, RhoIdentity, ALL_RHO_IDENTITIES};
use crate::module::FPModule;
use crate::poly::IntPoly;
use crate::quadmaps::{
    cross_effect, decompose_lin_hom, factor_through_p2, is_quadratic, CrossEffect, Decomposition,
    PolyMap, QuadVerdict, RPoly,
};
use crate::ring::{Ring, RingElement, RingPresentation};

/// Accumulated output of a session run.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub lines: Vec<String>,
    pub checks_failed: usize,
    pub checks_passed: usize,
}

impl Report {
    fn line(&mut self, s: String) {
        self.lines.push(s);
    }

    fn check(&mut self, name: &str, pos: &str, pass: bool, witness: Option<&str>) {
        let mut s = format!("CHECK {}@{} {}", name, pos, if pass { "PASS" } else { "FAIL" });
        if let Some(w) = witness {
            if !pass {
                s.push_str(&format!(" witness={}", w));
            }
        }
        if pass {
            self.checks_passed += 1;
        } else {
            self.checks_failed += 1;
        }
        self.lines.push(s);
    }

    fn sequence(&mut self, rep: &SequenceReport) {
        for p in &rep.positions {
            self.check(&rep.name, &p.label, p.pass, p.witness.as_deref());
        }
        for (label, inv) in &rep.term_invariants {
            self.line(format!(
                "RESULT {}({}) invariants: {}",
                rep.name,
                label,
                fmt_invariants(inv)
            ));
        }
        self.check(&rep.name, "all", rep.pass(), None);
    }

    pub fn ok(&self) -> bool {
        self.checks_failed == 0
    }
}

pub fn emit_report(report: &Report) -> String {
    let mut out = report.lines.join("\n");
    if !out.is_empty() {
        out.push('\n');
    }
    out
}

fn fmt_invariants(inv: &[BigInt]) -> String {
    let inner: Vec<String> = inv.iter().map(|d| d.to_string()).collect();
    format!("[{}]", inner.join(", "))
}

/// A parsed session: symbol tables plus the raw statements.
pub struct Session {
    rings: BTreeMap<String, Ring>,
    modules: BTreeMap<String, FPModule>,
    maps: BTreeMap<String, PolyMap>,
    presentations: BTreeMap<String, RingPresentation>,
    rng: ChaCha8Rng,
    report: Report,
}

pub fn run_session(text: &str) -> Result<Report> {
    run_session_with_seed(text, 0)
}

pub fn run_session_with_seed(text: &str, default_seed: u64) -> Result<Report> {
    let mut session = Session {
        rings: BTreeMap::new(),
        modules: BTreeMap::new(),
        maps: BTreeMap::new(),
        presentations: BTreeMap::new(),
        rng: ChaCha8Rng::seed_from_u64(default_seed),
        report: Report::default(),
    };
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        session
            .execute(line)
            .map_err(|e| match e {
                Error::Parse { .. } | Error::Semantic { .. } => e,
                other => Error::Semantic {
                    index: lineno + 1,
                    msg: other.to_string(),
                },
            })
            .map_err(|e| match e {
                Error::Parse { msg, .. } => Error::Parse {
                    line: lineno + 1,
                    msg,
                },
                other => other,
            })?;
    }
    Ok(session.report)
}

impl Session {
    fn execute(&mut self, line: &str) -> Result<()> {
        let tokens = tokenize(line)?;
        let words: Vec<&str> = tokens.iter().map(String::as_str).collect();
        match words.first() {
            Some(&"seed") => {
                let n: u64 = expect(&words, 1)?.parse().map_err(|_| parse_err("bad seed"))?;
                self.rng = ChaCha8Rng::seed_from_u64(n);
                self.report.line(format!("DEF seed {}", n));
                Ok(())
            }
            Some(&"ring") => self.stmt_ring(&words),
            Some(&"module") => self.stmt_module(&words),
            Some(&"map") => self.stmt_map(&words),
            Some(&"presentation") => self.stmt_presentation(&words),
            Some(&"compute") => self.stmt_compute(&words),
            Some(&"verify") => self.stmt_verify(&words),
            Some(&"analyze") => self.stmt_analyze(&words),
            Some(&"decompose") => self.stmt_decompose(&words),
            Some(&"factor") => self.stmt_factor(&words),
            Some(&"print") => {
                // `print report` is a no-op marker: the report is always
                // emitted; keep the statement for session readability.
                Ok(())
            }
            Some(other) => Err(parse_err(&format!("unknown statement '{}'", other))),
            None => Ok(()),
        }
    }

    fn ring(&self, name: &str) -> Result<Ring> {
        self.rings
            .get(name)
            .cloned()
            .ok_or_else(|| parse_err(&format!("unknown ring '{}'", name)))
    }

    fn module(&self, name: &str) -> Result<FPModule> {
        self.modules
            .get(name)
            .cloned()
            .ok_or_else(|| parse_err(&format!("unknown module '{}'", name)))
    }

    fn stmt_ring(&mut self, words: &[&str]) -> Result<()> {
        // ring R = Z | Zmod 4 | monogenic [-2,0] | product A B
        let name = expect(words, 1)?;
        if expect(words, 2)? != "=" {
            return Err(parse_err("expected '=' in ring definition"));
        }
        let ring = match expect(words, 3)? {
            "Z" => Ring::integers(),
            "Zmod" => {
                let n: i64 = expect(words, 4)?
                    .parse()
                    .map_err(|_| parse_err("bad modulus"))?;
                Ring::integers_mod(&BigInt::from(n))?
            }
            "monogenic" => {
                let coeffs = parse_int_list(expect(words, 4)?)?;
                Ring::monogenic(&coeffs)?
            }
            "product" => {
                let a = self.ring(expect(words, 4)?)?;
                let b = self.ring(expect(words, 5)?)?;
                Ring::product(&a, &b)?
            }
            other => return Err(parse_err(&format!("unknown ring preset '{}'", other))),
        };
        if self.rings.contains_key(name) {
            return Err(parse_err(&format!("ring '{}' already defined", name)));
        }
        self.report
            .line(format!("DEF ring {} = {}", name, ring.name()));
        self.rings.insert(name.to_string(), ring);
        Ok(())
    }

    fn stmt_module(&mut self, words: &[&str]) -> Result<()> {
        // module M over R gens 1 rels [[(2)]]
        let name = expect(words, 1)?;
        if expect(words, 2)? != "over" {
            return Err(parse_err("expected 'over'"));
        }
        let ring = self.ring(expect(words, 3)?)?;
        if expect(words, 4)? != "gens" {
            return Err(parse_err("expected 'gens'"));
        }
        let gens: usize = expect(words, 5)?
            .parse()
            .map_err(|_| parse_err("bad generator count"))?;
        let mut rels: Vec<Vec<RingElement>> = vec![];
        if words.len() > 6 {
            if expect(words, 6)? != "rels" {
                return Err(parse_err("expected 'rels'"));
            }
            rels = parse_relation_columns(expect(words, 7)?, &ring, gens)?;
        }
        if self.modules.contains_key(name) {
            return Err(parse_err(&format!("module '{}' already defined", name)));
        }
        self.report.line(format!(
            "DEF module {} over {} gens {} rels {}",
            name,
            ring.name(),
            gens,
            rels.len()
        ));
        self.modules
            .insert(name.to_string(), FPModule::new(ring, gens, rels));
        Ok(())
    }

    fn stmt_map(&mut self, words: &[&str]) -> Result<()> {
        // map f over R arity m n = [poly, ...]
        let name = expect(words, 1)?;
        if expect(words, 2)? != "over" {
            return Err(parse_err("expected 'over'"));
        }
        let ring = self.ring(expect(words, 3)?)?;
        if expect(words, 4)? != "arity" {
            return Err(parse_err("expected 'arity'"));
        }
        let m: usize = expect(words, 5)?.parse().map_err(|_| parse_err("bad arity"))?;
        let n: usize = expect(words, 6)?.parse().map_err(|_| parse_err("bad arity"))?;
        if expect(words, 7)? != "=" {
            return Err(parse_err("expected '='"));
        }
        let polys = split_top_level(strip_brackets(expect(words, 8)?, '[', ']')?)?;
        if polys.len() != n {
            return Err(parse_err(&format!(
                "expected {} component polynomials, got {}",
                n,
                polys.len()
            )));
        }
        let mut components = Vec::new();
        let mut denominators = Vec::new();
        for p in polys {
            let (poly, den) = parse_rpoly(&p, &ring, m)?;
            components.push(poly);
            denominators.push(den);
        }
        let map = PolyMap::with_denominators(ring.clone(), m, components, denominators)?;
        if self.maps.contains_key(name) {
            return Err(parse_err(&format!("map '{}' already defined", name)));
        }
        self.report.line(format!(
            "DEF map {} over {} arity {} {}",
            name,
            ring.name(),
            m,
            n
        ));
        self.maps.insert(name.to_string(), map);
        Ok(())
    }

    fn stmt_presentation(&mut self, words: &[&str]) -> Result<()> {
        // presentation P over R vars [X,Y] rels [X^2-X, X*Y] images [(0,1),(1,0)]
        let name = expect(words, 1)?;
        if expect(words, 2)? != "over" {
            return Err(parse_err("expected 'over'"));
        }
        let ring = self.ring(expect(words, 3)?)?;
        if expect(words, 4)? != "vars" {
            return Err(parse_err("expected 'vars'"));
        }
        let vars: Vec<String> = split_top_level(strip_brackets(expect(words, 5)?, '[', ']')?)?
            .into_iter()
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect();
        if expect(words, 6)? != "rels" {
            return Err(parse_err("expected 'rels'"));
        }
        let rel_strs = split_top_level(strip_brackets(expect(words, 7)?, '[', ']')?)?;
        if expect(words, 8)? != "images" {
            return Err(parse_err("expected 'images'"));
        }
        let img_strs = split_top_level(strip_brackets(expect(words, 9)?, '[', ']')?)?;
        let images: Vec<RingElement> = img_strs
            .iter()
            .map(|s| parse_element(s.trim(), &ring))
            .collect::<Result<_>>()?;
        let relations: Vec<IntPoly> = rel_strs
            .iter()
            .filter(|s| !s.trim().is_empty())
            .map(|s| parse_intpoly(s.trim(), &vars))
            .collect::<Result<_>>()?;
        let pres = RingPresentation::new(vars.clone(), relations, ring.clone(), images)?;
        self.report.line(format!(
            "DEF presentation {} over {} vars {}",
            name,
            ring.name(),
            vars.len()
        ));
        self.presentations.insert(name.to_string(), pres);
        Ok(())
    }

    fn stmt_compute(&mut self, words: &[&str]) -> Result<()> {
        let what = expect(words, 1)?;
        let name = expect(words, 2)?;
        match what {
            "i2" => {
                let ring = self.ring(name)?;
                let i2 = i2_ideal(&ring);
                self.report.line(format!(
                    "RESULT i2({}) invariants: {}",
                    name,
                    fmt_invariants(&i2.module.invariants())
                ));
            }
            "invariants" => {
                let m = self.module(name)?;
                self.report.line(format!(
                    "RESULT invariants({}) invariants: {}",
                    name,
                    fmt_invariants(&m.invariants())
                ));
            }
            "sym2" | "lambda2" | "gamma2" | "p2" => {
                let m = self.module(name)?;
                let tag = FunctorTag::from_token(what).unwrap();
                let i2 = i2_ideal(m.ring());
                let obj = functor_object_with_i2(tag, &m, &i2);
                self.report.line(format!(
                    "RESULT {}({}) invariants: {}",
                    what,
                    name,
                    fmt_invariants(&obj.module.invariants())
                ));
            }
            "k" | "kprime" => {
                let m = self.module(name)?;
                let suite = QuadSuite::new(&m);
                let k = suite.k_modules();
                let module = if what == "k" { &k.k } else { &k.kprime };
                self.report.line(format!(
                    "RESULT {}({}) invariants: {}",
                    what,
                    name,
                    fmt_invariants(&module.invariants())
                ));
            }
            other => return Err(parse_err(&format!("unknown compute function '{}'", other))),
        }
        Ok(())
    }

    fn stmt_verify(&mut self, words: &[&str]) -> Result<()> {
        let token = expect(words, 1)?;
        let name = expect(words, 2)?;
        if let Some(seq) = SequenceName::from_token(token) {
            let m = self.module(name)?;
            let suite = QuadSuite::new(&m);
            let rep = verify_with_suite(seq, &suite);
            self.report.sequence(&rep);
            return Ok(());
        }
        match token {
            "presred" => {
                let pres = self
                    .presentations
                    .get(name)
                    .cloned()
                    .ok_or_else(|| parse_err(&format!("unknown presentation '{}'", name)))?;
                match i2_presented(&pres) {
                    Ok(p) => {
                        self.report.check("presred", "well-defined", true, None);
                        self.report.check(
                            "presred",
                            "comparison-iso",
                            p.comparison.is_isomorphism(),
                            None,
                        );
                        self.report.line(format!(
                            "RESULT presred({}) invariants: {}",
                            name,
                            fmt_invariants(&p.module.invariants())
                        ));
                    }
                    Err(e) => {
                        self.report
                            .check("presred", "well-defined", false, Some(&e.to_string()));
                    }
                }
            }
            "relrho" => {
                let ring = self.ring(name)?;
                for id in ALL_RHO_IDENTITIES {
                    let samples = rho_samples(&ring, id, 100, 2, &mut self.rng);
                    self.report
                        .check("relrho", id.token(), id.check(&ring, &samples), None);
                }
                let all = ALL_RHO_IDENTITIES.iter().all(|id: &RhoIdentity| {
                    let samples = rho_samples(&ring, *id, 25, 2, &mut self.rng);
                    id.check(&ring, &samples)
                });
                self.report.check("relrho", "all", all, None);
            }
            other => return Err(parse_err(&format!("unknown verify token '{}'", other))),
        }
        Ok(())
    }

    fn stmt_analyze(&mut self, words: &[&str]) -> Result<()> {
        let name = expect(words, 1)?;
        let f = self
            .maps
            .get(name)
            .ok_or_else(|| parse_err(&format!("unknown map '{}'", name)))?;
        match is_quadratic(f) {
            QuadVerdict::Quadratic => {
                self.report.line(format!("RESULT analyze({}) quadratic", name));
                if let CrossEffect::Bilinear(mats) = cross_effect(f) {
                    let rendered: Vec<String> = mats
                        .iter()
                        .map(|mat| {
                            let rows: Vec<String> = mat
                                .iter()
                                .map(|row| {
                                    let cells: Vec<String> =
                                        row.iter().map(|c| format!("{}", f.ring.canon(c))).collect();
                                    format!("[{}]", cells.join(","))
                                })
                                .collect();
                            format!("[{}]", rows.join(","))
                        })
                        .collect();
                    self.report.line(format!(
                        "RESULT cross_effect({}) bilinear {}",
                        name,
                        rendered.join(";")
                    ));
                }
            }
            QuadVerdict::NotQuadratic { identity, witness } => {
                self.report.line(format!(
                    "RESULT analyze({}) not-quadratic identity={} witness={}",
                    name, identity, witness
                ));
            }
        }
        Ok(())
    }

    fn stmt_decompose(&mut self, words: &[&str]) -> Result<()> {
        let name = expect(words, 1)?;
        let f = self
            .maps
            .get(name)
            .cloned()
            .ok_or_else(|| parse_err(&format!("unknown map '{}'", name)))?;
        let mut r = None;
        let mut bound = 3i64;
        for w in &words[2..] {
            if let Some(rest) = w.strip_prefix("r=") {
                r = Some(parse_element(rest, &f.ring)?);
            } else if let Some(rest) = w.strip_prefix("bound=") {
                bound = rest.parse().map_err(|_| parse_err("bad bound"))?;
            } else {
                return Err(parse_err(&format!("unknown decompose option '{}'", w)));
            }
        }
        match decompose_lin_hom(&f, r, bound)? {
            Decomposition::Split {
                linear,
                homogeneous,
                unit,
            } => {
                let vars = var_names(f.arity_in);
                let l: Vec<String> = linear
                    .components
                    .iter()
                    .map(|p| p.render(&f.ring, &vars))
                    .collect();
                let h: Vec<String> = homogeneous
                    .components
                    .iter()
                    .map(|p| p.render(&f.ring, &vars))
                    .collect();
                self.report.line(format!(
                    "RESULT decompose({}) unit={} f1=[{}] f2=[{}]",
                    name,
                    f.ring.canon(&unit),
                    l.join("; "),
                    h.join("; ")
                ));
            }
            Decomposition::NoUnitPair { bound } => {
                self.report.line(format!(
                    "RESULT decompose({}) no-unit-pair bound={}",
                    name, bound
                ));
            }
        }
        Ok(())
    }

    fn stmt_factor(&mut self, words: &[&str]) -> Result<()> {
        let name = expect(words, 1)?;
        let f = self
            .maps
            .get(name)
            .cloned()
            .ok_or_else(|| parse_err(&format!("unknown map '{}'", name)))?;
        match factor_through_p2(&f) {
            Ok(fac) => {
                let labels = fac.p2.module.labels();
                let cells: Vec<String> = fac
                    .map
                    .columns()
                    .iter()
                    .zip(labels)
                    .map(|(col, label)| {
                        let vals: Vec<String> = col
                            .coords
                            .iter()
                            .map(|c| format!("{}", f.ring.canon(c)))
                            .collect();
                        format!("{}->({})", label, vals.join(","))
                    })
                    .collect();
                self.report
                    .line(format!("RESULT factor({}) {}", name, cells.join(" ")));
                // Round-trip spot check on small points, seeded.
                let ok = factor_round_trip(&f, &fac, &mut self.rng);
                self.report.check("factor", name, ok, None);
            }
            Err(e) => {
                self.report
                    .line(format!("RESULT factor({}) rejected: {}", name, e));
            }
        }
        Ok(())
    }
}

fn factor_round_trip(
    f: &PolyMap,
    fac: &crate::quadmaps::P2Factorization,
    rng: &mut ChaCha8Rng,
) -> bool {
    use rand::Rng;
    for _ in 0..20 {
        let point: Vec<RingElement> = (0..f.arity_in)
            .map(|_| {
                RingElement::new(
                    (0..f.ring.rank())
                        .map(|_| BigInt::from(rng.gen_range(-3i64..=3)))
                        .collect(),
                )
            })
            .collect();
        let direct = match f.eval(&point) {
            Ok(v) => v,
            Err(_) => return false,
        };
        let via = fac.apply_p(&point);
        if !direct.iter().zip(&via).all(|(a, b)| f.ring.eq(a, b)) {
            return false;
        }
    }
    true
}

fn var_names(m: usize) -> Vec<String> {
    (0..m).map(|i| format!("X{}", i + 1)).collect()
}

// ----- tokenization and literals -----

fn parse_err(msg: &str) -> Error {
    Error::Parse {
        line: 0,
        msg: msg.to_string(),
    }
}

fn expect<'a>(words: &[&'a str], idx: usize) -> Result<&'a str> {
    words
        .get(idx)
        .copied()
        .ok_or_else(|| parse_err("statement too short"))
}

/// Splits a line into words, keeping balanced bracket groups `[...]`/`(...)`
/// as single tokens (whitespace inside groups is allowed).
fn tokenize(line: &str) -> Result<Vec<String>> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    let mut depth = 0i32;
    for ch in line.chars() {
        match ch {
            '[' | '(' => {
                depth += 1;
                current.push(ch);
            }
            ']' | ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(parse_err("unbalanced brackets"));
                }
                current.push(ch);
            }
            c if c.is_whitespace() && depth == 0 => {
                if !current.is_empty() {
                    tokens.push(std::mem::take(&mut current));
                }
            }
            c => current.push(c),
        }
    }
    if depth != 0 {
        return Err(parse_err("unbalanced brackets"));
    }
    if !current.is_empty() {
        tokens.push(current);
    }
    Ok(tokens)
}

fn strip_brackets(s: &str, open: char, close: char) -> Result<&str> {
    let t = s.trim();
    if t.starts_with(open) && t.ends_with(close) {
        Ok(&t[1..t.len() - 1])
    } else {
        Err(parse_err(&format!("expected {}...{}", open, close)))
    }
}

/// Splits on top-level commas.
fn split_top_level(s: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut current = String::new();
    let mut depth = 0i32;
    for ch in s.chars() {
        match ch {
            '[' | '(' => {
                depth += 1;
                current.push(ch);
            }
            ']' | ')' => {
                depth -= 1;
                current.push(ch);
            }
            ',' if depth == 0 => out.push(std::mem::take(&mut current)),
            c => current.push(c),
        }
    }
    if !current.trim().is_empty() || !out.is_empty() {
        out.push(current);
    }
    Ok(out.into_iter().filter(|s| !s.trim().is_empty()).collect())
}

fn parse_int_list(s: &str) -> Result<Vec<BigInt>> {
    split_top_level(strip_brackets(s, '[', ']')?)?
        .iter()
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map(BigInt::from)
                .map_err(|_| parse_err(&format!("bad integer '{}'", t)))
        })
        .collect()
}

/// Element literal `(a,b,...)` over the ring Z-basis.
pub fn parse_element(s: &str, ring: &Ring) -> Result<RingElement> {
    let inner = strip_brackets(s, '(', ')')?;
    let coords: Vec<BigInt> = split_top_level(inner)?
        .iter()
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map(BigInt::from)
                .map_err(|_| parse_err(&format!("bad coordinate '{}'", t)))
        })
        .collect::<Result<_>>()?;
    if coords.len() != ring.rank() {
        return Err(parse_err(&format!(
            "element has {} coordinates, ring {} has rank {}",
            coords.len(),
            ring.name(),
            ring.rank()
        )));
    }
    Ok(ring.el(coords))
}

/// Relation columns `[[(..),(..)],[...]]`.
fn parse_relation_columns(
    s: &str,
    ring: &Ring,
    gens: usize,
) -> Result<Vec<Vec<RingElement>>> {
    let inner = strip_brackets(s, '[', ']')?;
    let cols = split_top_level(inner)?;
    let mut out = Vec::new();
    for col in cols {
        let entries = split_top_level(strip_brackets(col.trim(), '[', ']')?)?;
        if entries.len() != gens {
            return Err(parse_err(&format!(
                "relation column has {} entries, module has {} generators",
                entries.len(),
                gens
            )));
        }
        let parsed: Vec<RingElement> = entries
            .iter()
            .map(|e| parse_element(e.trim(), ring))
            .collect::<Result<_>>()?;
        out.push(parsed);
    }
    Ok(out)
}

/// Integer-coefficient polynomial over named variables: `3*X^2*Y - 2`.
pub fn parse_intpoly(s: &str, vars: &[String]) -> Result<IntPoly> {
    let nv = vars.len();
    let mut out = IntPoly::zero(nv);
    for (sign, term) in split_terms(s)? {
        let mut coeff = BigInt::from(sign);
        let mut exps = vec![0u32; nv];
        for factor in term.split('*') {
            let f = factor.trim();
            if f.is_empty() {
                continue;
            }
            if let Ok(n) = f.parse::<i64>() {
                coeff *= BigInt::from(n);
                continue;
            }
            let (name, exp) = match f.split_once('^') {
                Some((n, e)) => (
                    n.trim(),
                    e.trim()
                        .parse::<u32>()
                        .map_err(|_| parse_err(&format!("bad exponent in '{}'", f)))?,
                ),
                None => (f, 1),
            };
            let idx = vars
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| parse_err(&format!("unknown variable '{}'", name)))?;
            exps[idx] += exp;
        }
        out = out.add(&IntPoly::monomial(nv, exps, coeff));
    }
    Ok(out)
}

/// Ring-coefficient polynomial with optional denominator:
/// `X1^2 - X1` or `(X1^2 - X1)/2`. Variables X1..Xm, aliases X,Y,Z,W for
/// small arity.
pub fn parse_rpoly(s: &str, ring: &Ring, arity: usize) -> Result<(RPoly, BigInt)> {
    let t = s.trim();
    let (body, den) = if let Some(idx) = find_top_level_slash(t) {
        let body = strip_brackets(t[..idx].trim(), '(', ')')?;
        let den: i64 = t[idx + 1..]
            .trim()
            .parse()
            .map_err(|_| parse_err("bad denominator"))?;
        (body.to_string(), BigInt::from(den))
    } else {
        (t.to_string(), BigInt::from(1))
    };
    let mut vars: Vec<String> = (0..arity).map(|i| format!("X{}", i + 1)).collect();
    let aliases = ["X", "Y", "Z", "W"];
    let ip = {
        // try canonical names first, then aliases
        match parse_intpoly(&body, &vars) {
            Ok(p) => p,
            Err(_) if arity <= aliases.len() => {
                vars = aliases[..arity].iter().map(|s| s.to_string()).collect();
                parse_intpoly(&body, &vars)?
            }
            Err(e) => return Err(e),
        }
    };
    // Lift integer coefficients into the ring.
    let mut out = RPoly::zero(arity);
    for (exps, c) in ip.terms() {
        out = out.add(
            ring,
            &RPoly::monomial(arity, exps.clone(), ring.int_big(c.clone())),
        );
    }
    Ok((out, den))
}

fn find_top_level_slash(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            '/' if depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

/// Splits `a + b - c` into signed terms.
fn split_terms(s: &str) -> Result<Vec<(i64, String)>> {
    let mut out = Vec::new();
    let mut current = String::new();
    let mut sign = 1i64;
    let mut depth = 0i32;
    for ch in s.chars() {
        match ch {
            '(' | '[' => {
                depth += 1;
                current.push(ch);
            }
            ')' | ']' => {
                depth -= 1;
                current.push(ch);
            }
            '+' if depth == 0 => {
                if !current.trim().is_empty() {
                    out.push((sign, std::mem::take(&mut current)));
                }
                sign = 1;
            }
            '-' if depth == 0 => {
                if !current.trim().is_empty() {
                    out.push((sign, std::mem::take(&mut current)));
                }
                sign = -1;
            }
            c => current.push(c),
        }
    }
    if !current.trim().is_empty() {
        out.push((sign, current));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_session() {
        let text = "\
# basic session
ring R = Z
module M over R gens 1 rels [[(2)]]
compute p2 M
verify gmsequ M
print report
";
        let rep = run_session(text).expect("session runs");
        let out = emit_report(&rep);
        assert!(out.contains("RESULT p2(M) invariants: [4]"), "{}", out);
        assert!(out.contains("CHECK gmsequ@all PASS"), "{}", out);
        assert!(rep.ok());
    }

    #[test]
    fn empty_session_is_empty_report() {
        let rep = run_session("").unwrap();
        assert!(rep.lines.is_empty());
        assert!(emit_report(&rep).is_empty());
    }

    #[test]
    fn determinism() {
        let text = "\
seed 5
ring R = monogenic [-2,0]
module M over R gens 1 rels [[(0,1)]]
verify gmsequ M
verify relrho R
";
        let a = emit_report(&run_session(text).unwrap());
        let b = emit_report(&run_session(text).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn unknown_tokens_are_errors() {
        assert!(run_session("verify nonsense M").is_err());
        assert!(run_session("frobnicate").is_err());
        assert!(run_session("ring R = Zmod x").is_err());
    }

    #[test]
    fn quadmap_statements() {
        let text = "\
ring R = Z
map f over R arity 1 1 = [(X^2 - X)/2]
map g over R arity 1 1 = [X^3]
analyze f
analyze g
decompose f
factor f
";
        let rep = run_session(text).expect("session runs");
        let out = emit_report(&rep);
        assert!(out.contains("RESULT analyze(f) quadratic"), "{}", out);
        assert!(out.contains("not-quadratic identity=defadd1"), "{}", out);
        assert!(out.contains("no-unit-pair bound=3"), "{}", out);
        assert!(out.contains("CHECK factor@f PASS"), "{}", out);
    }

    #[test]
    fn presentation_statement() {
        let text = "\
ring R = monogenic [0,-1]
presentation P over R vars [X] rels [X^2 - X] images [(0,1)]
verify presred P
";
        let rep = run_session(text).expect("session runs");
        let out = emit_report(&rep);
        assert!(out.contains("CHECK presred@comparison-iso PASS"), "{}", out);
    }

    #[test]
    fn failing_check_sets_exit_status() {
        // A deliberately wrong claim: ker_props_free on a non-free module.
        let text = "\
ring R = Z
module M over R gens 1 rels [[(2)]]
verify ker_props_free M
";
        let rep = run_session(text).expect("session runs");
        assert!(!rep.ok());
        let out = emit_report(&rep);
        assert!(out.contains("CHECK ker_props_free@M-free FAIL"), "{}", out);
    }
}
