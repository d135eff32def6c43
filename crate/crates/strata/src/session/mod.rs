//! Session-file driven front end: a line-oriented grammar of declarations
//! and commands with canonical, diff-stable output. Identical session files
//! produce byte-identical reports.

mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::Error;
use crate::hc::{assassin_bound, equiv_reachable, equiv_u, ChainWitness, HCDatum};
use crate::ideal::Ideal;
use crate::poly::{parse_poly, MonomialOrder, Poly, PolyRing};
use crate::spectrum::{Certificate, PrimeIdeal, SpecSubset};
use crate::torsion::{hom_cyclic_is_zero, is_regular_sequence, CyclicModule, Stratum, SubquotientHandle};

pub use parse::{parse_line, parse_session, Command, Line, ZSpecAst};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SessionErrorKind {
    /// Grammar violation; exit code 2.
    Parse,
    /// Well-formed input that names unknown entities or violates an
    /// operation's precondition; exit code 1.
    Semantic,
}

#[derive(Debug, Clone)]
pub struct SessionError {
    pub line: usize,
    pub kind: SessionErrorKind,
    pub message: String,
}

impl fmt::Display for SessionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            SessionErrorKind::Parse => "parse error",
            SessionErrorKind::Semantic => "error",
        };
        write!(f, "line {}: {}: {}", self.line, kind, self.message)
    }
}

impl std::error::Error for SessionError {}

impl SessionError {
    pub fn exit_code(&self) -> i32 {
        match self.kind {
            SessionErrorKind::Parse => 2,
            SessionErrorKind::Semantic => 1,
        }
    }
}

enum Entity {
    Ideal(Ideal),
    Prime(PrimeIdeal),
    Module(CyclicModule),
}

/// Execution context: one ambient ring per session, an optional generator
/// datum, and the named entities in declaration order.
pub struct Session {
    ring: Option<Arc<PolyRing>>,
    datum: Option<HCDatum>,
    names: Vec<String>,
    entities: BTreeMap<String, Entity>,
}

impl Default for Session {
    fn default() -> Self {
        Session::new()
    }
}

fn semantic(line: usize, message: impl Into<String>) -> SessionError {
    SessionError {
        line,
        kind: SessionErrorKind::Semantic,
        message: message.into(),
    }
}

fn parse_error(line: usize, message: impl Into<String>) -> SessionError {
    SessionError {
        line,
        kind: SessionErrorKind::Parse,
        message: message.into(),
    }
}

fn from_core(line: usize, e: Error) -> SessionError {
    let kind = match e {
        Error::Parse(_) | Error::UnknownVariable(_) => SessionErrorKind::Parse,
        _ => SessionErrorKind::Semantic,
    };
    SessionError {
        line,
        kind,
        message: e.to_string(),
    }
}

impl Session {
    pub fn new() -> Session {
        Session {
            ring: None,
            datum: None,
            names: Vec::new(),
            entities: BTreeMap::new(),
        }
    }

    fn ring(&self, line: usize) -> Result<&Arc<PolyRing>, SessionError> {
        self.ring
            .as_ref()
            .ok_or_else(|| semantic(line, "no ring declared; start with `ring ...` or `weyl n=...`"))
    }

    fn datum(&self, line: usize) -> Result<&HCDatum, SessionError> {
        self.datum
            .as_ref()
            .ok_or_else(|| semantic(line, "no generator datum declared; use `weyl n=...`"))
    }

    fn bind(&mut self, line: usize, name: String, entity: Entity) -> Result<(), SessionError> {
        if self.entities.contains_key(&name) {
            return Err(semantic(line, format!("name `{name}` is already bound")));
        }
        self.names.push(name.clone());
        self.entities.insert(name, entity);
        Ok(())
    }

    fn lookup(&self, line: usize, name: &str) -> Result<&Entity, SessionError> {
        self.entities
            .get(name)
            .ok_or_else(|| semantic(line, format!("unknown name `{name}`")))
    }

    fn lookup_ideal(&self, line: usize, name: &str) -> Result<Ideal, SessionError> {
        match self.lookup(line, name)? {
            Entity::Ideal(i) => Ok(i.clone()),
            Entity::Prime(p) => Ok(p.ideal().clone()),
            Entity::Module(_) => Err(semantic(line, format!("`{name}` is a module, not an ideal"))),
        }
    }

    fn lookup_prime(&self, line: usize, name: &str) -> Result<PrimeIdeal, SessionError> {
        match self.lookup(line, name)? {
            Entity::Prime(p) => Ok(p.clone()),
            _ => Err(semantic(line, format!("`{name}` is not a declared prime"))),
        }
    }

    fn lookup_module(&self, line: usize, name: &str) -> Result<&CyclicModule, SessionError> {
        match self.lookup(line, name)? {
            Entity::Module(m) => Ok(m),
            _ => Err(semantic(line, format!("`{name}` is not a declared module"))),
        }
    }

    fn poly(&self, line: usize, text: &str) -> Result<Poly, SessionError> {
        let ring = self.ring(line)?;
        parse_poly(ring, text).map_err(|e| from_core(line, e))
    }

    /// A declared name or an inline `ideal(<polys>)` literal.
    fn resolve_ideal_ref(&self, line: usize, text: &str) -> Result<Ideal, SessionError> {
        let text = text.trim();
        if let Some(rest) = text.strip_prefix("ideal") {
            let rest = rest.trim();
            if rest.starts_with('(') && rest.ends_with(')') {
                let gens: Vec<Poly> = rest[1..rest.len() - 1]
                    .split(',')
                    .map(|s| s.trim())
                    .filter(|s| !s.is_empty())
                    .map(|s| self.poly(line, s))
                    .collect::<Result<_, _>>()?;
                let ring = Arc::clone(self.ring(line)?);
                return Ok(Ideal::new(&ring, gens));
            }
        }
        self.lookup_ideal(line, text)
    }

    fn polys(&self, line: usize, texts: &[String]) -> Result<Vec<Poly>, SessionError> {
        texts.iter().map(|t| self.poly(line, t)).collect()
    }

    /// A stable label for a prime: its session name when one is bound to an
    /// equal ideal, otherwise its canonical generator display.
    fn label(&self, p: &PrimeIdeal) -> String {
        for name in &self.names {
            if let Some(Entity::Prime(q)) = self.entities.get(name) {
                if q == p {
                    return name.clone();
                }
            }
        }
        p.display()
    }

    pub fn apply_declaration(&mut self, line: usize, decl: &Line) -> Result<(), SessionError> {
        match decl {
            Line::Ring { vars } => {
                if self.ring.is_some() {
                    return Err(semantic(line, "ring already declared"));
                }
                self.ring = Some(PolyRing::new(vars.clone()).map_err(|e| from_core(line, e))?);
                Ok(())
            }
            Line::Weyl { n } => {
                if self.ring.is_some() {
                    return Err(semantic(line, "ring already declared"));
                }
                let datum = HCDatum::weyl(*n).map_err(|e| from_core(line, e))?;
                self.ring = Some(Arc::clone(datum.ring()));
                self.datum = Some(datum);
                Ok(())
            }
            Line::IdealDecl { name, gens } => {
                let gens = self.polys(line, gens)?;
                let ring = Arc::clone(self.ring(line)?);
                self.bind(line, name.clone(), Entity::Ideal(Ideal::new(&ring, gens)))
            }
            Line::PrimeDecl { name, gens, cert } => {
                let gens = self.polys(line, gens)?;
                let ring = Arc::clone(self.ring(line)?);
                let ideal = Ideal::new(&ring, gens);
                // `auto` picks the strongest checkable certificate; used by
                // the one-shot CLI where no explicit class is given.
                let prime = if cert == "auto" {
                    PrimeIdeal::with_auto_certificate(ideal)
                } else {
                    let cert = Certificate::parse(cert).map_err(|e| from_core(line, e))?;
                    PrimeIdeal::new(ideal, cert)
                }
                .map_err(|e| from_core(line, e))?;
                self.bind(line, name.clone(), Entity::Prime(prime))
            }
            Line::ModuleDecl {
                name,
                ideal,
                decomposition,
            } => {
                let defining = self.resolve_ideal_ref(line, ideal)?;
                let declared = match decomposition {
                    None => None,
                    Some(pairs) => {
                        let mut out = Vec::new();
                        for (q, p) in pairs {
                            out.push((self.lookup_ideal(line, q)?, self.lookup_prime(line, p)?));
                        }
                        Some(out)
                    }
                };
                let module =
                    CyclicModule::new(defining, declared).map_err(|e| from_core(line, e))?;
                self.bind(line, name.clone(), Entity::Module(module))
            }
            Line::Command(_) => unreachable!("commands are executed, not declared"),
        }
    }

    pub fn execute_command(&mut self, line: usize, cmd: &Command) -> Result<Vec<String>, SessionError> {
        let mut out = Vec::new();
        let mut involved: Vec<PrimeIdeal> = Vec::new();
        let mut shift_primes: Vec<PrimeIdeal> = Vec::new();

        match cmd {
            Command::Gb { ideal, order } => {
                let i = self.lookup_ideal(line, ideal)?;
                let ord = match order.as_deref() {
                    None | Some("grevlex") => MonomialOrder::GrevLex,
                    Some("lex") => MonomialOrder::Lex,
                    Some(other) => {
                        return Err(semantic(line, format!("unknown order `{other}`")))
                    }
                };
                out.push(format_basis(&i.groebner_basis(ord)));
            }
            Command::Member { ideal, poly } => {
                let i = self.lookup_ideal(line, ideal)?;
                let f = self.poly(line, poly)?;
                out.push(format!("member = {}", i.contains(&f)));
            }
            Command::Dim { ideal } => {
                let i = self.lookup_ideal(line, ideal)?;
                out.push(format!("dim = {}", i.dimension()));
            }
            Command::Coheight { prime } => {
                let p = self.lookup_prime(line, prime)?;
                out.push(format!("coheight = {}", p.coheight()));
                involved.push(p);
            }
            Command::Height { prime } => {
                let p = self.lookup_prime(line, prime)?;
                out.push(format!("height = {}", p.height()));
                involved.push(p);
            }
            Command::Intersect { left, right } => {
                let a = self.lookup_ideal(line, left)?;
                let b = self.lookup_ideal(line, right)?;
                out.push(format_basis(&a.intersection(&b).groebner_basis(MonomialOrder::GrevLex)));
            }
            Command::Quotient { ideal, poly } => {
                let i = self.lookup_ideal(line, ideal)?;
                let f = self.poly(line, poly)?;
                let q = i.quotient_by_poly(&f).map_err(|e| from_core(line, e))?;
                out.push(format_basis(&q.groebner_basis(MonomialOrder::GrevLex)));
            }
            Command::Saturate { ideal, by } => {
                let i = self.lookup_ideal(line, ideal)?;
                let j = self.lookup_ideal(line, by)?;
                let s = i.saturation(&j).map_err(|e| from_core(line, e))?;
                out.push(format_basis(&s.groebner_basis(MonomialOrder::GrevLex)));
            }
            Command::Comaximal { left, right } => {
                let a = self.lookup_ideal(line, left)?;
                let b = self.lookup_ideal(line, right)?;
                out.push(format!("comaximal = {}", a.is_comaximal(&b)));
            }
            Command::RadMember { ideal, poly } => {
                let i = self.lookup_ideal(line, ideal)?;
                let f = self.poly(line, poly)?;
                out.push(format!("radmember = {}", i.radical_contains(&f)));
            }
            Command::Ass { module } => {
                let m = self.lookup_module(line, module)?;
                let ass = m.assassin().map_err(|e| from_core(line, e))?;
                out.push(format!("ass = {}", format_prime_set(&ass)));
                involved.extend(ass);
            }
            Command::MinSupp { module } => {
                let m = self.lookup_module(line, module)?;
                let min = m.min_support().map_err(|e| from_core(line, e))?;
                out.push(format!("minsupp = {}", format_prime_set(&min)));
                involved.extend(min);
            }
            Command::Torsion { module, z } => {
                let subset = self.z_subset(line, z, &mut involved)?;
                let m = self.lookup_module(line, module)?;
                let t = m.torsion_radical(&subset).map_err(|e| from_core(line, e))?;
                out.push(format!("torsion = {}", format_handle(&t)));
                if let Ok(ass) = m.assassin() {
                    involved.extend(ass);
                }
            }
            Command::Strata { module } => {
                let m = self.lookup_module(line, module)?;
                let profile = m.strata_profile().map_err(|e| from_core(line, e))?;
                for row in &profile.rows {
                    out.push(format!("t_{} = {}", row.index, format_handle(&row.handle)));
                }
                match profile.classification {
                    Stratum::Pure(i) => out.push(format!("stratum = {i}")),
                    Stratum::Mixed => out.push("stratum = mixed".to_string()),
                }
                if let Ok(ass) = m.assassin() {
                    involved.extend(ass);
                }
            }
            Command::PComp { module, prime } => {
                let p = self.lookup_prime(line, prime)?;
                let m = self.lookup_module(line, module)?;
                let h = m.p_component(&p).map_err(|e| from_core(line, e))?;
                out.push(format!("pcomp = {}", format_handle(&h)));
                involved.push(p);
            }
            Command::Decompose { module } => {
                let m = self.lookup_module(line, module)?;
                let crt = m.crt_decompose().map_err(|e| from_core(line, e))?;
                for w in &crt.warnings {
                    out.push(format!("warning: {w}"));
                }
                let mut total = Some(0usize);
                for (p, h) in &crt.components {
                    let mut line_text =
                        format!("component {} = {}", p.display(), format_handle(h));
                    match h.vector_space_dimension() {
                        Some(d) => {
                            line_text.push_str(&format!(", dim {d}"));
                            total = total.map(|t| t + d);
                        }
                        None => total = None,
                    }
                    out.push(line_text);
                    involved.push(p.clone());
                }
                if let Some(t) = total {
                    if crt.warnings.is_empty() {
                        out.push(format!("total dim = {t}"));
                    }
                }
            }
            Command::HomZero { left, right } => {
                let a = self.lookup_ideal(line, left)?;
                let b = self.lookup_ideal(line, right)?;
                let z = hom_cyclic_is_zero(&a, &b).map_err(|e| from_core(line, e))?;
                out.push(format!("homzero = {z}"));
            }
            Command::RegSeq { polys } => {
                let seq = self.polys(line, polys)?;
                let ring = Arc::clone(self.ring(line)?);
                out.push(format!("regseq = {}", is_regular_sequence(&ring, &seq)));
            }
            Command::HcEquiv { q, p, via } => {
                let qp = self.lookup_prime(line, q)?;
                let pp = self.lookup_prime(line, p)?;
                let datum = self.datum(line)?;
                let gen = datum
                    .generator(via)
                    .ok_or_else(|| semantic(line, format!("unknown generator `{via}`")))?;
                let related = equiv_u(&qp, &pp, gen).map_err(|e| from_core(line, e))?;
                out.push(format!("related = {related}"));
                shift_primes.extend([qp.clone(), pp.clone()]);
                involved.extend([qp, pp]);
            }
            Command::HcReach {
                start,
                candidates,
                depth,
            } => {
                let s = self.lookup_prime(line, start)?;
                let cands = candidates
                    .iter()
                    .map(|c| self.lookup_prime(line, c))
                    .collect::<Result<Vec<_>, _>>()?;
                let datum = self.datum(line)?.clone();
                let reached = equiv_reachable(&s, &cands, &datum, *depth)
                    .map_err(|e| from_core(line, e))?;
                let names: Vec<String> = reached.iter().map(|(p, _)| self.label(p)).collect();
                out.push(format!("reachable = {{{}}}", names.join(", ")));
                for (p, witness) in &reached {
                    out.push(format!(
                        "chain {}: {}",
                        self.label(p),
                        self.format_chain(witness, &datum)
                    ));
                }
                shift_primes.push(s.clone());
                shift_primes.extend(cands.iter().cloned());
                involved.push(s);
                involved.extend(cands);
            }
            Command::AssBound {
                prime,
                candidates,
                depth,
            } => {
                let p = self.lookup_prime(line, prime)?;
                let cands = candidates
                    .iter()
                    .map(|c| self.lookup_prime(line, c))
                    .collect::<Result<Vec<_>, _>>()?;
                let datum = self.datum(line)?.clone();
                let admitted =
                    assassin_bound(&p, &cands, &datum, *depth).map_err(|e| from_core(line, e))?;
                let names: Vec<String> = admitted.iter().map(|q| self.label(q)).collect();
                out.push(format!("admitted = {{{}}}", names.join(", ")));
                shift_primes.push(p.clone());
                shift_primes.extend(cands.iter().cloned());
                involved.push(p);
                involved.extend(cands);
            }
        }

        // Trust flags: results touching caller-asserted primes say so.
        let mut asserted: Vec<String> = Vec::new();
        for p in &involved {
            if !p.is_verified() {
                let label = self.label(p);
                if !asserted.contains(&label) {
                    asserted.push(label);
                }
            }
        }
        if !asserted.is_empty() {
            out.push(format!(
                "note: conditional on declared primality: {}",
                asserted.join(", ")
            ));
        }
        let mut non_principal: Vec<String> = Vec::new();
        for p in &shift_primes {
            if !p.is_principal() {
                let label = self.label(p);
                if !non_principal.contains(&label) {
                    non_principal.push(label);
                }
            }
        }
        if !non_principal.is_empty() {
            out.push(format!(
                "note: non-principal prime in shift relation: {}",
                non_principal.join(", ")
            ));
        }
        Ok(out)
    }

    fn z_subset(
        &self,
        line: usize,
        z: &ZSpecAst,
        involved: &mut Vec<PrimeIdeal>,
    ) -> Result<SpecSubset, SessionError> {
        match z {
            ZSpecAst::CoheightAtMost(i) => Ok(SpecSubset::coheight_at_most(*i)),
            ZSpecAst::Up(names) => {
                let primes = names
                    .iter()
                    .map(|n| self.lookup_prime(line, n))
                    .collect::<Result<Vec<_>, _>>()?;
                involved.extend(primes.iter().cloned());
                Ok(SpecSubset::up_closure(primes))
            }
        }
    }

    fn format_chain(&self, witness: &ChainWitness, datum: &HCDatum) -> String {
        witness.display_with(|p| self.label(p), datum)
    }
}

fn format_basis(basis: &[Poly]) -> String {
    let parts: Vec<String> = basis.iter().map(|g| g.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn format_prime_set(primes: &[PrimeIdeal]) -> String {
    let parts: Vec<String> = primes.iter().map(|p| p.display()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn format_handle(h: &SubquotientHandle) -> String {
    let mut s = h.display();
    if h.is_whole() {
        s.push_str(" [whole module]");
    } else if h.is_zero_submodule() {
        s.push_str(" [zero]");
    }
    s
}

/// Runs a session text and returns the report. With `echo`, each command
/// block starts with `> <command>` and ends with a blank line; without, only
/// result lines are emitted (one-shot mode).
pub fn run_session_text(text: &str, echo: bool) -> Result<String, SessionError> {
    let mut session = Session::new();
    let mut report = String::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let stripped = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let trimmed = stripped.trim();
        if trimmed.is_empty() {
            continue;
        }
        let parsed = parse_line(line_no, trimmed)?;
        match parsed {
            Line::Command(cmd) => {
                let lines = session.execute_command(line_no, &cmd)?;
                if echo {
                    report.push_str(&format!("> {trimmed}\n"));
                }
                for l in &lines {
                    report.push_str(l);
                    report.push('\n');
                }
                if echo {
                    report.push('\n');
                }
            }
            decl => session.apply_declaration(line_no, &decl)?,
        }
    }
    Ok(report)
}

/// Convenience used by `main` and the parse-error examples: map a raw
/// string into a session error at line 0, treated as a parse failure.
pub fn invalid_invocation(message: impl Into<String>) -> SessionError {
    parse_error(0, message)
}
