use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser};

use strata::session::{invalid_invocation, run_session_text, SessionError};

/// Exact commutative algebra over the rationals: Groebner bases, prime
/// spectra, coheight strata, torsion radicals, and shift-relation
/// reachability, driven by session files or one-shot flags.
///
/// Session mode: `strata <file>` executes the declarations and commands in
/// the file and prints one result block per command. One-shot mode runs a
/// single command against an inline context, e.g.
/// `strata --ring t1,t2 --dim "ideal(t1)"` or
/// `strata --weyl 2 --hc-equiv "t1-2" "t1-1" --via Y1`.
///
/// Ideal literals are written `ideal(<poly>, ...)`; bare polynomials name
/// principal ideals. Exit codes: 0 success, 1 semantic error, 2 parse error.
#[derive(Parser, Debug)]
#[command(name = "strata", version, group = ArgGroup::new("context").args(["ring", "weyl"]))]
#[command(group = ArgGroup::new("cmd").args([
    "gb", "member", "dim", "coheight", "height", "intersect", "quotient",
    "saturate", "comaximal", "radmember", "ass", "minsupp", "torsion",
    "strata_cmd", "pcomp", "decompose", "homzero", "regseq", "hc_equiv",
    "hc_reach", "ass_bound",
]))]
struct Cli {
    /// Session file to execute.
    #[arg(value_name = "SESSION", conflicts_with_all = ["context", "cmd"])]
    session: Option<PathBuf>,

    /// Ambient ring variables, comma separated (e.g. `t1,t2`).
    #[arg(long, value_name = "VARS")]
    ring: Option<String>,

    /// Weyl datum on K[t1..tn] with shift generators Y1..Yn, X1..Xn.
    #[arg(long, value_name = "N")]
    weyl: Option<usize>,

    /// Reduced Groebner basis of an ideal.
    #[arg(long, value_name = "IDEAL", allow_hyphen_values = true)]
    gb: Option<String>,

    /// Monomial order for `--gb` (lex or grevlex).
    #[arg(long, value_name = "ORDER")]
    order: Option<String>,

    /// Ideal membership: `--member <ideal> <poly>`.
    #[arg(long, num_args = 2, value_names = ["IDEAL", "POLY"], allow_hyphen_values = true)]
    member: Option<Vec<String>>,

    /// Krull dimension of the quotient by an ideal.
    #[arg(long, value_name = "IDEAL", allow_hyphen_values = true)]
    dim: Option<String>,

    /// Coheight of a prime.
    #[arg(long, value_name = "PRIME", allow_hyphen_values = true)]
    coheight: Option<String>,

    /// Height of a prime.
    #[arg(long, value_name = "PRIME", allow_hyphen_values = true)]
    height: Option<String>,

    /// Intersection of two ideals.
    #[arg(long, num_args = 2, value_names = ["IDEAL", "IDEAL"], allow_hyphen_values = true)]
    intersect: Option<Vec<String>>,

    /// Colon ideal: `--quotient <ideal> <poly>`.
    #[arg(long, num_args = 2, value_names = ["IDEAL", "POLY"], allow_hyphen_values = true)]
    quotient: Option<Vec<String>>,

    /// Saturation: `--saturate <ideal> <ideal>`.
    #[arg(long, num_args = 2, value_names = ["IDEAL", "IDEAL"], allow_hyphen_values = true)]
    saturate: Option<Vec<String>>,

    /// Comaximality test for two ideals.
    #[arg(long, num_args = 2, value_names = ["IDEAL", "IDEAL"], allow_hyphen_values = true)]
    comaximal: Option<Vec<String>>,

    /// Radical membership: `--radmember <ideal> <poly>`.
    #[arg(long, num_args = 2, value_names = ["IDEAL", "POLY"], allow_hyphen_values = true)]
    radmember: Option<Vec<String>>,

    /// Assassin of a cyclic module given by its (monomial) defining ideal.
    #[arg(long, value_name = "IDEAL", allow_hyphen_values = true)]
    ass: Option<String>,

    /// Minimal support primes of a cyclic module.
    #[arg(long, value_name = "IDEAL", allow_hyphen_values = true)]
    minsupp: Option<String>,

    /// Torsion radical: `--torsion <ideal> <Z<=i | up(<ideal>; ...)>`.
    #[arg(long, num_args = 2, value_names = ["IDEAL", "ZSET"], allow_hyphen_values = true)]
    torsion: Option<Vec<String>>,

    /// Stratum profile of a cyclic module.
    #[arg(long = "strata", value_name = "IDEAL", allow_hyphen_values = true)]
    strata_cmd: Option<String>,

    /// Primary component: `--pcomp <ideal> <prime>`.
    #[arg(long, num_args = 2, value_names = ["IDEAL", "PRIME"], allow_hyphen_values = true)]
    pcomp: Option<Vec<String>>,

    /// CRT decomposition of a cyclic module.
    #[arg(long, value_name = "IDEAL", allow_hyphen_values = true)]
    decompose: Option<String>,

    /// Hom vanishing for cyclic modules: `--homzero <ideal> <ideal>`.
    #[arg(long, num_args = 2, value_names = ["IDEAL", "IDEAL"], allow_hyphen_values = true)]
    homzero: Option<Vec<String>>,

    /// Regular sequence test: `--regseq "(f1, f2, ...)"`.
    #[arg(long, value_name = "POLYS", allow_hyphen_values = true)]
    regseq: Option<String>,

    /// Single-step shift relation: `--hc-equiv <q> <p> --via <gen>`.
    #[arg(long = "hc-equiv", num_args = 2, value_names = ["Q", "P"], allow_hyphen_values = true)]
    hc_equiv: Option<Vec<String>>,

    /// Generator name for `--hc-equiv`.
    #[arg(long, value_name = "GEN")]
    via: Option<String>,

    /// Chain reachability from a prime: `--hc-reach <q> --in <list> --depth <d>`.
    #[arg(long = "hc-reach", value_name = "PRIME", allow_hyphen_values = true)]
    hc_reach: Option<String>,

    /// Assassin bound toward a prime: `--ass-bound <p> --in <list> --depth <d>`.
    #[arg(long = "ass-bound", value_name = "PRIME", allow_hyphen_values = true)]
    ass_bound: Option<String>,

    /// Candidate primes for reachability, semicolon separated.
    #[arg(long = "in", value_name = "PRIMES", allow_hyphen_values = true)]
    candidates: Option<String>,

    /// Depth bound for reachability.
    #[arg(long, value_name = "D")]
    depth: Option<usize>,
}

/// Builds the synthetic session for one-shot mode. Entity arguments become
/// numbered declarations; the command line references them.
struct Synth {
    decls: Vec<String>,
    counter: usize,
    weyl: bool,
}

impl Synth {
    fn new(weyl: bool) -> Synth {
        Synth {
            decls: Vec::new(),
            counter: 0,
            weyl,
        }
    }

    fn fresh(&mut self) -> String {
        self.counter += 1;
        format!("arg{}", self.counter)
    }

    /// `ideal(...)` literal or bare polynomial -> ideal declaration.
    fn ideal(&mut self, text: &str) -> Result<String, SessionError> {
        let name = self.fresh();
        let body = ideal_body(text)?;
        self.decls.push(format!("ideal {name} = ({body})"));
        Ok(name)
    }

    /// Prime from a literal, certified automatically.
    fn prime(&mut self, text: &str) -> Result<String, SessionError> {
        let name = self.fresh();
        let body = ideal_body(text)?;
        self.decls.push(format!("prime {name} = ({body}) cert=auto"));
        Ok(name)
    }

    /// Module over a defining ideal (no declared decomposition in one-shot
    /// mode).
    fn module(&mut self, text: &str) -> Result<String, SessionError> {
        let ideal = self.ideal(text)?;
        let name = self.fresh();
        self.decls.push(format!("module {name} = quotient({ideal})"));
        Ok(name)
    }
}

fn ideal_body(text: &str) -> Result<String, SessionError> {
    let t = text.trim();
    if let Some(rest) = t.strip_prefix("ideal") {
        let rest = rest.trim();
        if rest.starts_with('(') && rest.ends_with(')') {
            return Ok(rest[1..rest.len() - 1].trim().to_string());
        }
        return Err(invalid_invocation(format!("malformed ideal literal `{t}`")));
    }
    Ok(t.to_string())
}

fn split_semicolons(text: &str) -> Vec<String> {
    text.split(';')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

fn build_one_shot(cli: &Cli) -> Result<String, SessionError> {
    let mut synth = Synth::new(cli.weyl.is_some());
    let context = if let Some(n) = cli.weyl {
        format!("weyl n={n}")
    } else if let Some(vars) = &cli.ring {
        format!("ring {vars}")
    } else {
        return Err(invalid_invocation(
            "one-shot mode needs --ring or --weyl to fix the ambient ring",
        ));
    };

    let command = if let Some(i) = &cli.gb {
        let name = synth.ideal(i)?;
        match &cli.order {
            Some(o) => format!("gb {name} {o}"),
            None => format!("gb {name}"),
        }
    } else if let Some(args) = &cli.member {
        let name = synth.ideal(&args[0])?;
        format!("member {name} {}", args[1])
    } else if let Some(i) = &cli.dim {
        format!("dim {}", synth.ideal(i)?)
    } else if let Some(p) = &cli.coheight {
        format!("coheight {}", synth.prime(p)?)
    } else if let Some(p) = &cli.height {
        format!("height {}", synth.prime(p)?)
    } else if let Some(args) = &cli.intersect {
        format!("intersect {} {}", synth.ideal(&args[0])?, synth.ideal(&args[1])?)
    } else if let Some(args) = &cli.quotient {
        format!("quotient {} {}", synth.ideal(&args[0])?, args[1])
    } else if let Some(args) = &cli.saturate {
        format!("saturate {} {}", synth.ideal(&args[0])?, synth.ideal(&args[1])?)
    } else if let Some(args) = &cli.comaximal {
        format!("comaximal {} {}", synth.ideal(&args[0])?, synth.ideal(&args[1])?)
    } else if let Some(args) = &cli.radmember {
        format!("radmember {} {}", synth.ideal(&args[0])?, args[1])
    } else if let Some(i) = &cli.ass {
        format!("ass {}", synth.module(i)?)
    } else if let Some(i) = &cli.minsupp {
        format!("minsupp {}", synth.module(i)?)
    } else if let Some(args) = &cli.torsion {
        let module = synth.module(&args[0])?;
        let zspec = args[1].trim();
        if zspec.starts_with("Z<=") {
            format!("torsion {module} {zspec}")
        } else if let Some(rest) = zspec.strip_prefix("up") {
            let rest = rest.trim();
            if !rest.starts_with('(') || !rest.ends_with(')') {
                return Err(invalid_invocation("expected `up(<ideal>; ...)`"));
            }
            let mut names = Vec::new();
            for item in split_semicolons(&rest[1..rest.len() - 1]) {
                names.push(synth.prime(&item)?);
            }
            format!("torsion {module} up({})", names.join(", "))
        } else {
            return Err(invalid_invocation(format!("bad Z-set `{zspec}`")));
        }
    } else if let Some(i) = &cli.strata_cmd {
        format!("strata {}", synth.module(i)?)
    } else if let Some(args) = &cli.pcomp {
        let module = synth.module(&args[0])?;
        format!("pcomp {module} {}", synth.prime(&args[1])?)
    } else if let Some(i) = &cli.decompose {
        format!("decompose {}", synth.module(i)?)
    } else if let Some(args) = &cli.homzero {
        format!("homzero {} {}", synth.ideal(&args[0])?, synth.ideal(&args[1])?)
    } else if let Some(polys) = &cli.regseq {
        let t = polys.trim();
        let inner = if t.starts_with('(') && t.ends_with(')') {
            &t[1..t.len() - 1]
        } else {
            t
        };
        format!("regseq ({inner})")
    } else if let Some(args) = &cli.hc_equiv {
        let via = cli
            .via
            .as_ref()
            .ok_or_else(|| invalid_invocation("--hc-equiv needs --via <gen>"))?;
        if !synth.weyl {
            return Err(invalid_invocation("--hc-equiv needs --weyl <n>"));
        }
        let q = synth.prime(&args[0])?;
        let p = synth.prime(&args[1])?;
        format!("hc-equiv {q} {p} via {via}")
    } else if let Some(start) = &cli.hc_reach {
        let (cands, depth) = reach_args(cli)?;
        if !synth.weyl {
            return Err(invalid_invocation("--hc-reach needs --weyl <n>"));
        }
        let s = synth.prime(start)?;
        let mut names = Vec::new();
        for c in cands {
            names.push(synth.prime(&c)?);
        }
        format!("hc-reach {s} in {{{}}} depth {depth}", names.join(", "))
    } else if let Some(p) = &cli.ass_bound {
        let (cands, depth) = reach_args(cli)?;
        if !synth.weyl {
            return Err(invalid_invocation("--ass-bound needs --weyl <n>"));
        }
        let pn = synth.prime(p)?;
        let mut names = Vec::new();
        for c in cands {
            names.push(synth.prime(&c)?);
        }
        format!("ass-bound {pn} in {{{}}} depth {depth}", names.join(", "))
    } else {
        return Err(invalid_invocation(
            "no command given; see --help for the available operations",
        ));
    };

    let mut text = String::new();
    text.push_str(&context);
    text.push('\n');
    for d in &synth.decls {
        text.push_str(d);
        text.push('\n');
    }
    text.push_str(&command);
    text.push('\n');
    Ok(text)
}

fn reach_args(cli: &Cli) -> Result<(Vec<String>, usize), SessionError> {
    let cands = cli
        .candidates
        .as_ref()
        .map(|c| split_semicolons(c))
        .unwrap_or_default();
    let depth = cli
        .depth
        .ok_or_else(|| invalid_invocation("reachability needs --depth <d>"))?;
    Ok((cands, depth))
}

fn run(cli: &Cli) -> Result<String, SessionError> {
    if let Some(path) = &cli.session {
        let text = std::fs::read_to_string(path).map_err(|e| {
            invalid_invocation(format!("cannot read {}: {e}", path.display()))
        })?;
        run_session_text(&text, true)
    } else {
        let synthesized = build_one_shot(cli)?;
        run_session_text(&synthesized, false)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            print!("{report}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            if cli.session.is_some() {
                eprintln!("{e}");
            } else {
                // One-shot errors carry synthetic line numbers; print the
                // message alone.
                eprintln!("error: {}", e.message);
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
