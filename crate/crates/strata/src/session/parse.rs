//! Line-oriented session grammar. One declaration or command per line; `#`
//! starts a comment. Declarations bind names; commands reference them.

use super::{SessionError, SessionErrorKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZSpecAst {
    CoheightAtMost(i64),
    Up(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Line {
    Ring {
        vars: Vec<String>,
    },
    Weyl {
        n: usize,
    },
    IdealDecl {
        name: String,
        gens: Vec<String>,
    },
    PrimeDecl {
        name: String,
        gens: Vec<String>,
        cert: String,
    },
    ModuleDecl {
        name: String,
        ideal: String,
        decomposition: Option<Vec<(String, String)>>,
    },
    Command(Command),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Gb { ideal: String, order: Option<String> },
    Member { ideal: String, poly: String },
    Dim { ideal: String },
    Coheight { prime: String },
    Height { prime: String },
    Intersect { left: String, right: String },
    Quotient { ideal: String, poly: String },
    Saturate { ideal: String, by: String },
    Comaximal { left: String, right: String },
    RadMember { ideal: String, poly: String },
    Ass { module: String },
    MinSupp { module: String },
    Torsion { module: String, z: ZSpecAst },
    Strata { module: String },
    PComp { module: String, prime: String },
    Decompose { module: String },
    HomZero { left: String, right: String },
    RegSeq { polys: Vec<String> },
    HcEquiv { q: String, p: String, via: String },
    HcReach { start: String, candidates: Vec<String>, depth: usize },
    AssBound { prime: String, candidates: Vec<String>, depth: usize },
}

fn parse_err(line: usize, msg: impl Into<String>) -> SessionError {
    SessionError {
        line,
        kind: SessionErrorKind::Parse,
        message: msg.into(),
    }
}

/// Splits `s` on top-level commas (commas not nested in parentheses).
fn split_top_commas(s: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for c in s.chars() {
        match c {
            '(' => {
                depth += 1;
                current.push(c);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                current.push(c);
            }
            ',' if depth == 0 => {
                parts.push(current.trim().to_string());
                current.clear();
            }
            _ => current.push(c),
        }
    }
    if !current.trim().is_empty() {
        parts.push(current.trim().to_string());
    }
    parts
}

/// Extracts the contents of a parenthesized list: `(a, b, c)` -> items.
fn paren_list(line: usize, s: &str) -> Result<Vec<String>, SessionError> {
    let s = s.trim();
    if !s.starts_with('(') || !s.ends_with(')') {
        return Err(parse_err(line, format!("expected a parenthesized list, got `{s}`")));
    }
    Ok(split_top_commas(&s[1..s.len() - 1]))
}

/// Accepts both `(<polys>)` and the `ideal(<polys>)` spelling.
fn ideal_literal_list(line: usize, s: &str) -> Result<Vec<String>, SessionError> {
    let s = s.trim();
    let body = s.strip_prefix("ideal").map(str::trim).unwrap_or(s);
    paren_list(line, body)
}

/// Splits a run of top-level parenthesized groups, ignoring separators
/// between them: `(a, b); (c, d)` or `(a, b),(c, d)` -> ["(a, b)", "(c, d)"].
fn paren_groups(line: usize, s: &str) -> Result<Vec<String>, SessionError> {
    let mut groups = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for c in s.chars() {
        match c {
            '(' => {
                depth += 1;
                current.push(c);
            }
            ')' => {
                if depth == 0 {
                    return Err(parse_err(line, "unbalanced `)`"));
                }
                depth -= 1;
                current.push(c);
                if depth == 0 {
                    groups.push(current.trim().to_string());
                    current.clear();
                }
            }
            _ if depth > 0 => current.push(c),
            ',' | ';' | ' ' | '\t' => {}
            other => {
                return Err(parse_err(line, format!("unexpected `{other}` between groups")))
            }
        }
    }
    if depth != 0 {
        return Err(parse_err(line, "unbalanced `(`"));
    }
    Ok(groups)
}

/// Finds the index of the `)` matching an opening paren at position 0.
fn matching_paren(line: usize, s: &str) -> Result<usize, SessionError> {
    let mut depth = 0usize;
    for (idx, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Ok(idx);
                }
            }
            _ => {}
        }
    }
    Err(parse_err(line, "expected `)`"))
}

fn brace_list(line: usize, s: &str) -> Result<Vec<String>, SessionError> {
    let s = s.trim();
    if !s.starts_with('{') || !s.ends_with('}') {
        return Err(parse_err(line, format!("expected a braced list, got `{s}`")));
    }
    Ok(s[1..s.len() - 1]
        .split(',')
        .map(|t| t.trim().to_string())
        .filter(|t| !t.is_empty())
        .collect())
}

fn ident(line: usize, s: &str) -> Result<String, SessionError> {
    let s = s.trim();
    let ok = !s.is_empty()
        && s.chars().next().unwrap().is_alphabetic()
        && s.chars().all(|c| c.is_alphanumeric() || c == '_');
    if ok {
        Ok(s.to_string())
    } else {
        Err(parse_err(line, format!("expected a name, got `{s}`")))
    }
}

pub fn parse_z_spec(line: usize, s: &str) -> Result<ZSpecAst, SessionError> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix("Z<=") {
        let i: i64 = rest
            .trim()
            .parse()
            .map_err(|_| parse_err(line, format!("bad coheight bound `{rest}`")))?;
        return Ok(ZSpecAst::CoheightAtMost(i));
    }
    if let Some(rest) = s.strip_prefix("up") {
        let names = paren_list(line, rest.trim())?
            .into_iter()
            .map(|n| ident(line, &n))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(ZSpecAst::Up(names));
    }
    Err(parse_err(line, format!("expected `Z<=i` or `up(...)`, got `{s}`")))
}

/// Parses one nonempty, non-comment line.
pub fn parse_line(line_no: usize, text: &str) -> Result<Line, SessionError> {
    let text = text.trim();
    let (head, rest) = match text.split_once(char::is_whitespace) {
        Some((h, r)) => (h, r.trim()),
        None => (text, ""),
    };

    match head {
        "ring" => {
            let vars: Vec<String> = rest
                .split(',')
                .map(|v| v.trim().to_string())
                .filter(|v| !v.is_empty())
                .collect();
            if vars.is_empty() {
                return Err(parse_err(line_no, "ring declaration needs variables"));
            }
            Ok(Line::Ring { vars })
        }
        "weyl" => {
            let n = rest
                .strip_prefix("n=")
                .and_then(|v| v.trim().parse::<usize>().ok())
                .ok_or_else(|| parse_err(line_no, "expected `weyl n=<k>`"))?;
            Ok(Line::Weyl { n })
        }
        "ideal" => {
            let (name, body) = rest
                .split_once('=')
                .ok_or_else(|| parse_err(line_no, "expected `ideal <name> = (<polys>)`"))?;
            Ok(Line::IdealDecl {
                name: ident(line_no, name)?,
                gens: ideal_literal_list(line_no, body)?,
            })
        }
        "prime" => {
            let (name, body) = rest
                .split_once('=')
                .ok_or_else(|| parse_err(line_no, "expected `prime <name> = (<polys>) cert=<...>`"))?;
            let body = body.trim();
            let (list_part, cert) = match body.rsplit_once("cert=") {
                Some((l, c)) => (l.trim(), c.trim().to_string()),
                None => {
                    return Err(parse_err(line_no, "prime declaration needs `cert=<...>`"))
                }
            };
            Ok(Line::PrimeDecl {
                name: ident(line_no, name)?,
                gens: ideal_literal_list(line_no, list_part)?,
                cert,
            })
        }
        "module" => {
            let (name, body) = rest
                .split_once('=')
                .ok_or_else(|| parse_err(line_no, "expected `module <name> = quotient(<ideal>)`"))?;
            let body = body.trim();
            let after = body.strip_prefix("quotient").ok_or_else(|| {
                parse_err(line_no, "expected `module <name> = quotient(<ideal>)`")
            })?;
            let after = after.trim();
            if !after.starts_with('(') {
                return Err(parse_err(line_no, "expected `quotient(<ideal>)`"));
            }
            let close = matching_paren(line_no, after)?;
            // Either a declared name or an inline `ideal(...)` literal.
            let ideal = after[1..close].trim().to_string();
            if ideal.is_empty() {
                return Err(parse_err(line_no, "empty quotient body"));
            }
            let tail = after[close + 1..].trim();
            let decomposition = if tail.is_empty() {
                None
            } else {
                let pairs = tail
                    .strip_prefix("decomp:")
                    .or_else(|| tail.strip_prefix("decomposition:"))
                    .ok_or_else(|| parse_err(line_no, format!("unexpected trailer `{tail}`")))?;
                let mut out = Vec::new();
                for group in paren_groups(line_no, pairs)? {
                    let items = paren_list(line_no, &group)?;
                    if items.len() != 2 {
                        return Err(parse_err(
                            line_no,
                            "each decomposition entry is `(<ideal>, <prime>)`",
                        ));
                    }
                    out.push((ident(line_no, &items[0])?, ident(line_no, &items[1])?));
                }
                if out.is_empty() {
                    return Err(parse_err(line_no, "empty decomposition list"));
                }
                Some(out)
            };
            Ok(Line::ModuleDecl {
                name: ident(line_no, name)?,
                ideal,
                decomposition,
            })
        }
        "gb" => {
            let mut parts = rest.split_whitespace();
            let ideal = ident(line_no, parts.next().unwrap_or(""))?;
            let order = parts.next().map(|s| s.to_string());
            if parts.next().is_some() {
                return Err(parse_err(line_no, "expected `gb <ideal> [<order>]`"));
            }
            Ok(Line::Command(Command::Gb { ideal, order }))
        }
        "member" | "quotient" | "radmember" => {
            let (name, poly) = rest
                .split_once(char::is_whitespace)
                .ok_or_else(|| parse_err(line_no, format!("expected `{head} <ideal> <poly>`")))?;
            let name = ident(line_no, name)?;
            let poly = poly.trim().to_string();
            Ok(Line::Command(match head {
                "member" => Command::Member { ideal: name, poly },
                "quotient" => Command::Quotient { ideal: name, poly },
                _ => Command::RadMember { ideal: name, poly },
            }))
        }
        "dim" => Ok(Line::Command(Command::Dim {
            ideal: ident(line_no, rest)?,
        })),
        "coheight" => Ok(Line::Command(Command::Coheight {
            prime: ident(line_no, rest)?,
        })),
        "height" => Ok(Line::Command(Command::Height {
            prime: ident(line_no, rest)?,
        })),
        "intersect" | "saturate" | "comaximal" | "homzero" => {
            let mut parts = rest.split_whitespace();
            let a = ident(line_no, parts.next().unwrap_or(""))?;
            let b = ident(line_no, parts.next().unwrap_or(""))?;
            if parts.next().is_some() {
                return Err(parse_err(line_no, format!("expected `{head} <a> <b>`")));
            }
            Ok(Line::Command(match head {
                "intersect" => Command::Intersect { left: a, right: b },
                "saturate" => Command::Saturate { ideal: a, by: b },
                "comaximal" => Command::Comaximal { left: a, right: b },
                _ => Command::HomZero { left: a, right: b },
            }))
        }
        "ass" => Ok(Line::Command(Command::Ass {
            module: ident(line_no, rest)?,
        })),
        "minsupp" => Ok(Line::Command(Command::MinSupp {
            module: ident(line_no, rest)?,
        })),
        "torsion" => {
            let (module, z) = rest
                .split_once(char::is_whitespace)
                .ok_or_else(|| parse_err(line_no, "expected `torsion <module> Z<=i|up(...)`"))?;
            Ok(Line::Command(Command::Torsion {
                module: ident(line_no, module)?,
                z: parse_z_spec(line_no, z)?,
            }))
        }
        "strata" => Ok(Line::Command(Command::Strata {
            module: ident(line_no, rest)?,
        })),
        "pcomp" => {
            let mut parts = rest.split_whitespace();
            let module = ident(line_no, parts.next().unwrap_or(""))?;
            let prime = ident(line_no, parts.next().unwrap_or(""))?;
            Ok(Line::Command(Command::PComp { module, prime }))
        }
        "decompose" => Ok(Line::Command(Command::Decompose {
            module: ident(line_no, rest)?,
        })),
        "regseq" => Ok(Line::Command(Command::RegSeq {
            polys: paren_list(line_no, rest)?,
        })),
        "hc-equiv" => {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            if parts.len() != 4 || parts[2] != "via" {
                return Err(parse_err(line_no, "expected `hc-equiv <q> <p> via <gen>`"));
            }
            Ok(Line::Command(Command::HcEquiv {
                q: ident(line_no, parts[0])?,
                p: ident(line_no, parts[1])?,
                via: parts[3].to_string(),
            }))
        }
        "hc-reach" | "ass-bound" => {
            // <name> in {<names>} depth <d>
            let (name, tail) = rest
                .split_once(char::is_whitespace)
                .ok_or_else(|| parse_err(line_no, format!("expected `{head} <p> in {{...}} depth <d>`")))?;
            let name = ident(line_no, name)?;
            let tail = tail.trim();
            let tail = tail
                .strip_prefix("in")
                .ok_or_else(|| parse_err(line_no, "expected `in {<primes>}`"))?
                .trim();
            let close = tail
                .find('}')
                .ok_or_else(|| parse_err(line_no, "expected `}`"))?;
            let candidates = brace_list(line_no, &tail[..=close])?
                .into_iter()
                .map(|n| ident(line_no, &n))
                .collect::<Result<Vec<_>, _>>()?;
            let depth_part = tail[close + 1..].trim();
            let depth = depth_part
                .strip_prefix("depth")
                .and_then(|v| v.trim().parse::<usize>().ok())
                .ok_or_else(|| parse_err(line_no, "expected `depth <d>`"))?;
            Ok(Line::Command(if head == "hc-reach" {
                Command::HcReach {
                    start: name,
                    candidates,
                    depth,
                }
            } else {
                Command::AssBound {
                    prime: name,
                    candidates,
                    depth,
                }
            }))
        }
        other => Err(parse_err(line_no, format!("unknown directive `{other}`"))),
    }
}

/// Parses a whole session text into numbered lines.
pub fn parse_session(text: &str) -> Result<Vec<(usize, Line)>, SessionError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let stripped = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        if stripped.trim().is_empty() {
            continue;
        }
        out.push((line_no, parse_line(line_no, stripped)?));
    }
    Ok(out)
}
