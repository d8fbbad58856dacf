//! Line-oriented reader for `.gps` instance files.
//!
//! ```text
//! # comment
//! group = Z2 x Z2
//! ring = Z
//! module = Z@(0,0) x Z4@(1,0)
//! submodule N = (4,0), (0,2)
//! subset Y = {N}
//! ```
//!
//! Statements come in the order group, ring, module, then any mix of
//! `submodule` and `subset`. Positions are 1-based and count characters.

use std::fmt;

use gps_core::{BaseRing, Factor, GradedModule, GradedSubmodule, GradingGroup, Model};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{column}: {message}{}", near(.token))]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    /// The offending token; empty at end of line.
    pub token: String,
}

fn near(token: &str) -> String {
    if token.is_empty() { String::new() } else { format!(" (at `{token}`)") }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    /// Kept as text; range checks happen where the value is used.
    Int(String),
    Punct(char),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) | Tok::Int(s) => f.write_str(s),
            Tok::Punct(c) => write!(f, "{c}"),
        }
    }
}

struct Lexeme {
    tok: Tok,
    column: usize,
}

fn lex(line_no: usize, text: &str) -> Result<Vec<Lexeme>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else if c.is_ascii_digit() || (c == '-' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit())) {
            i += 1;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            Tok::Int(chars[start..i].iter().collect())
        } else if "=(),{}@<>".contains(c) {
            i += 1;
            Tok::Punct(c)
        } else {
            return Err(ParseError {
                line: line_no,
                column,
                message: format!("unexpected character `{c}`"),
                token: c.to_string(),
            });
        };
        out.push(Lexeme { tok, column });
    }
    Ok(out)
}

/// Cursor over one statement.
struct Line<'a> {
    no: usize,
    toks: &'a [Lexeme],
    pos: usize,
    /// Column just past the last character, for errors at end of line.
    end: usize,
}

impl<'a> Line<'a> {
    fn err_here(&self, message: impl Into<String>) -> ParseError {
        match self.toks.get(self.pos) {
            Some(l) => ParseError { line: self.no, column: l.column, message: message.into(), token: l.tok.to_string() },
            None => ParseError { line: self.no, column: self.end, message: message.into(), token: String::new() },
        }
    }

    fn err_at(&self, lexeme: usize, message: impl Into<String>) -> ParseError {
        let l = &self.toks[lexeme];
        ParseError { line: self.no, column: l.column, message: message.into(), token: l.tok.to_string() }
    }

    fn peek(&self) -> Option<&'a Tok> {
        self.toks.get(self.pos).map(|l| &l.tok)
    }

    fn next(&mut self) -> Option<&'a Tok> {
        let t = self.peek();
        self.pos += t.is_some() as usize;
        t
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(Tok::Punct(p)) if *p == c => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err_here(format!("expected `{c}`"))),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Punct(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_ident(&mut self, word: &str) -> bool {
        if matches!(self.peek(), Some(Tok::Ident(s)) if s == word) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self, what: &str) -> Result<&'a str, ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.err_here(format!("expected {what}"))),
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        match self.peek() {
            Some(Tok::Int(s)) => {
                let v = s.parse::<i64>().map_err(|_| self.err_here("integer out of range"))?;
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.err_here("expected an integer")),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.err_here("unexpected trailing input")),
        }
    }

    /// `Z` or `Z<n>`; returns `0` for `Z`.
    fn cyclic(&mut self) -> Result<i64, ParseError> {
        let at = self.pos;
        let word = self.ident("`Z` or `Z<n>`")?;
        let Some(rest) = word.strip_prefix('Z') else {
            return Err(self.err_at(at, "expected `Z` or `Z<n>`"));
        };
        if rest.is_empty() {
            return Ok(0);
        }
        if !rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(self.err_at(at, "expected `Z` or `Z<n>`"));
        }
        rest.parse::<i64>().map_err(|_| self.err_at(at, "integer out of range"))
    }

    /// `(a, b, …)`.
    fn tuple(&mut self) -> Result<Vec<i64>, ParseError> {
        self.expect('(')?;
        let mut out = vec![self.int()?];
        while self.eat(',') {
            out.push(self.int()?);
        }
        self.expect(')')?;
        Ok(out)
    }
}

#[derive(PartialEq, PartialOrd)]
enum Stage {
    Start,
    Group,
    Ring,
    Module,
}

/// Parse a model; every named submodule is canonicalised.
pub fn parse_model(text: &str) -> Result<Model, ParseError> {
    let mut stage = Stage::Start;
    let mut group: Option<GradingGroup> = None;
    let mut ring: Option<BaseRing> = None;
    let mut model: Option<Model> = None;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let no = idx + 1;
        last_line = no;
        let toks = lex(no, raw)?;
        if toks.is_empty() {
            continue;
        }
        let mut line = Line { no, toks: &toks, pos: 0, end: raw.chars().count() + 1 };
        let keyword = line.ident("a statement keyword")?;
        match keyword {
            "group" => {
                if stage != Stage::Start {
                    return Err(line.err_at(0, "duplicate or misplaced group declaration"));
                }
                line.expect('=')?;
                let mut orders = Vec::new();
                loop {
                    let at = line.pos;
                    let k = line.cyclic()?;
                    let k = u32::try_from(k).ok().filter(|&k| k >= 1).ok_or_else(|| {
                        line.err_at(at, "grading group factors must be finite cyclic groups Z<k> with k >= 1")
                    })?;
                    orders.push(k);
                    if !line.eat_ident("x") {
                        break;
                    }
                }
                line.finish()?;
                group = Some(GradingGroup::new(orders).map_err(|e| line.err_at(0, e.to_string()))?);
                stage = Stage::Group;
            }
            "ring" => {
                if stage == Stage::Start {
                    return Err(line.err_at(0, "group must precede ring"));
                }
                if stage != Stage::Group {
                    return Err(line.err_at(0, "duplicate or misplaced ring declaration"));
                }
                line.expect('=')?;
                let at = line.pos;
                let n = line.cyclic()?;
                line.finish()?;
                ring = Some(BaseRing::new(n).map_err(|e| line.err_at(at, e.to_string()))?);
                stage = Stage::Ring;
            }
            "module" => {
                if stage < Stage::Ring {
                    return Err(line.err_at(0, "ring must precede module"));
                }
                if stage == Stage::Module {
                    return Err(line.err_at(0, "duplicate module declaration"));
                }
                line.expect('=')?;
                let g = group.as_ref().expect("stage order");
                let r = ring.expect("stage order");
                let mut factors = Vec::new();
                loop {
                    let at = line.pos;
                    let order = line.cyclic()?;
                    line.expect('@')?;
                    let deg_at = line.pos;
                    let raw = if line.peek() == Some(&Tok::Punct('(')) { line.tuple()? } else { vec![line.int()?] };
                    if raw.len() != g.orders().len() {
                        return Err(line.err_at(
                            deg_at,
                            format!("degree needs {} component(s), got {}", g.orders().len(), raw.len()),
                        ));
                    }
                    let degree = g.degree(&raw).map_err(|e| line.err_at(deg_at, e.to_string()))?;
                    factors.push((at, Factor { order, degree }));
                    if !line.eat_ident("x") {
                        break;
                    }
                }
                line.finish()?;
                for (at, f) in &factors {
                    if r.is_finite() && (f.order == 0 || r.modulus() % f.order != 0) {
                        return Err(line.err_at(
                            *at,
                            format!("factor order {} does not divide ring modulus {}", f.order, r.modulus()),
                        ));
                    }
                }
                let m = GradedModule::new(r, g.clone(), factors.into_iter().map(|(_, f)| f).collect())
                    .map_err(|e| line.err_at(0, e.to_string()))?;
                model = Some(Model::new(m));
                stage = Stage::Module;
            }
            "submodule" | "subset" => {
                let Some(model) = model.as_mut() else {
                    return Err(line.err_at(0, format!("module must precede {keyword}")));
                };
                let name_at = line.pos;
                let name = line.ident("a name")?.to_string();
                if model.submodules.iter().any(|(n, _)| *n == name) || model.subsets.iter().any(|(n, _)| *n == name) {
                    return Err(line.err_at(name_at, format!("name `{name}` is already defined")));
                }
                line.expect('=')?;
                if keyword == "submodule" {
                    let sub = submodule_rhs(&mut line, &model.module)?;
                    model.submodules.push((name, sub));
                } else {
                    line.expect('{')?;
                    let mut members = Vec::new();
                    if !line.eat('}') {
                        loop {
                            let at = line.pos;
                            let member = line.ident("a submodule name")?;
                            if model.submodule(member).is_none() {
                                return Err(line.err_at(at, format!("unknown submodule `{member}`")));
                            }
                            members.push(member.to_string());
                            if line.eat('}') {
                                break;
                            }
                            line.expect(',')?;
                        }
                    }
                    line.finish()?;
                    model.subsets.push((name, members));
                }
            }
            other => {
                return Err(line.err_at(0, format!("unknown statement `{other}`")));
            }
        }
    }
    model.ok_or_else(|| {
        let message = match stage {
            Stage::Start => "missing group declaration",
            Stage::Group => "missing ring declaration",
            _ => "missing module declaration",
        };
        ParseError { line: last_line.max(1), column: 1, message: message.into(), token: String::new() }
    })
}

/// `0`, or generator vectors `(…), (…)`, optionally wrapped in `< >`.
fn submodule_rhs(line: &mut Line<'_>, m: &GradedModule) -> Result<GradedSubmodule, ParseError> {
    if matches!(line.peek(), Some(Tok::Int(s)) if s == "0") {
        line.next();
        line.finish()?;
        return Ok(m.zero_submodule());
    }
    let angled = line.eat('<');
    let mut gens = Vec::new();
    loop {
        let at = line.pos;
        let v = line.tuple()?;
        if v.len() != m.rank() {
            return Err(line.err_at(at, format!("vector has {} entries, module has {} factors", v.len(), m.rank())));
        }
        gens.push(v);
        if !line.eat(',') {
            break;
        }
    }
    if angled {
        line.expect('>')?;
    }
    line.finish()?;
    m.span(&gens).map_err(|e| line.err_at(0, e.to_string()))
}

/// Canonical text: parsing it again yields an equal model.
pub fn render_model(model: &Model) -> String {
    let m = &model.module;
    let mut out = String::new();
    out.push_str(&format!("group = {}\n", m.group()));
    out.push_str(&format!("ring = {}\n", m.ring()));
    out.push_str(&format!("module = {m}\n"));
    for (name, sub) in &model.submodules {
        out.push_str(&format!("submodule {name} = {}\n", generator_list(m, sub)));
    }
    for (name, members) in &model.subsets {
        out.push_str(&format!("subset {name} = {{{}}}\n", members.join(", ")));
    }
    out
}

/// `0` or the canonical generators separated by `, `.
pub fn generator_list(m: &GradedModule, n: &GradedSubmodule) -> String {
    let gens = m.generators(n);
    if gens.is_empty() {
        return "0".into();
    }
    gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z_times_z_instance() {
        let m = parse_model("group = Z2\nring = Z\nmodule = Z@0 x Z@1\nsubmodule N = (4,0)\n").unwrap();
        assert_eq!(m.module.rank(), 2);
        assert_eq!(m.submodule("N"), Some(&m.module.span(&[vec![4, 0]]).unwrap()));
    }

    #[test]
    fn factor_order_must_divide_modulus() {
        let e = parse_model("group = Z2\nring = Z6\nmodule = Z4@0\n").unwrap_err();
        assert_eq!(e.message, "factor order 4 does not divide ring modulus 6");
        assert_eq!((e.line, e.column, e.token.as_str()), (3, 10, "Z4"));
    }

    #[test]
    fn ordering_rules() {
        let e = parse_model("group = Z2\nmodule = Z@0\n").unwrap_err();
        assert_eq!((e.line, e.message.as_str()), (2, "ring must precede module"));
        let e = parse_model("ring = Z\n").unwrap_err();
        assert_eq!((e.line, e.message.as_str()), (1, "group must precede ring"));
        let e = parse_model("group = Z2\nring = Z\nsubmodule N = 0\n").unwrap_err();
        assert_eq!(e.message, "module must precede submodule");
    }

    #[test]
    fn semantic_errors_carry_positions() {
        let e = parse_model("group = Z2\nring = Z\nmodule = Z@0\nsubmodule N = (1,2)\n").unwrap_err();
        assert_eq!((e.line, e.column), (4, 15));
        let e = parse_model("group = Z2\nring = Z\nmodule = Z@0\nsubset Y = {N}\n").unwrap_err();
        assert_eq!((e.line, e.column, e.message.as_str()), (4, 13, "unknown submodule `N`"));
        let e = parse_model("group = Z2\nring = Z\nmodule = Z@0\nsubmodule N = (99999999999999999999)\n").unwrap_err();
        assert_eq!(e.message, "integer out of range");
        let e = parse_model("group = Z2\nring = Z\nmodule = Z@(0,1)\n").unwrap_err();
        assert_eq!(e.message, "degree needs 1 component(s), got 2");
    }

    #[test]
    fn lexer_rejects_stray_characters() {
        let e = parse_model("group = Z2 ; ring = Z\n").unwrap_err();
        assert_eq!((e.line, e.column, e.token.as_str()), (1, 12, ";"));
    }

    #[test]
    fn round_trip_is_identity_on_canonical_forms() {
        let src = "# two degrees\ngroup = Z2 x Z2\nring = Z\nmodule = Z4@(0,0) x Z@(1,0)\n\
                   submodule A = <(6,0), (0,-3)>\nsubmodule B = 0\nsubset Y = {A, B}\nsubset E = {}\n";
        let m = parse_model(src).unwrap();
        let text = render_model(&m);
        assert_eq!(parse_model(&text).unwrap(), m);
        assert_eq!(render_model(&parse_model(&text).unwrap()), text);
        assert!(text.contains("submodule A = (2,0), (0,3)\n"), "{text}");
    }
}
