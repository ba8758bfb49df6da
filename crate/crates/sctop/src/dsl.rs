//! The space description language.
//!
//! ```text
//! doc    := space | map
//! space  := "finite" "{" "elems" ":" names? [";" "leq" ":" pairs?] [";"] "}"
//!         | "lift" "(" space ")"
//!         | "sum" "(" space "," space ")"
//!         | atom ["(" ident ")"]
//! pairs  := name ("<" | "<=") name ("," ...)*
//! map    := "map" "{" "from" ":" space ";" "to" ":" space ";" "pairs" ":" arrows? [";"] "}"
//! arrows := name "->" name ("," ...)*
//! ```
//!
//! Names are runs of letters, digits, `_`, `.` and `'`. `#` starts a comment.

use std::fmt;

use sctop_core::catalog::{self, SymbolicSpace};
use sctop_core::error::{Axiom, Error as CoreError};
use sctop_core::{FinPoset, FinSpace, SpaceMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DslError {
    #[error("{at}: expected {expected}, found {found}")]
    Parse { at: Span, expected: String, found: String },
    #[error("{at}: {message}")]
    Semantic { at: Span, message: String },
}

impl DslError {
    pub fn span(&self) -> Span {
        match self {
            DslError::Parse { at, .. } | DslError::Semantic { at, .. } => *at,
        }
    }

    fn semantic(at: Span, message: impl Into<String>) -> Self {
        DslError::Semantic { at, message: message.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Name {
    pub text: String,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeqPair {
    pub lo: Name,
    pub hi: Name,
    pub strict: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpaceExpr {
    Finite { elems: Vec<Name>, leq: Vec<LeqPair>, span: Span },
    Atom { name: Name, variant: Option<Name> },
    Lift { inner: Box<SpaceExpr>, span: Span },
    Sum { left: Box<SpaceExpr>, right: Box<SpaceExpr>, span: Span },
}

impl SpaceExpr {
    pub fn span(&self) -> Span {
        match self {
            SpaceExpr::Finite { span, .. } | SpaceExpr::Lift { span, .. } | SpaceExpr::Sum { span, .. } => *span,
            SpaceExpr::Atom { name, .. } => name.span,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapDoc {
    pub from: SpaceExpr,
    pub to: SpaceExpr,
    pub pairs: Vec<(Name, Name)>,
    pub span: Span,
    /// Where the `pairs` keyword sits; totality errors point here.
    pub pairs_span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Space(SpaceExpr),
    Map(MapDoc),
}

// ---------------------------------------------------------------------------
// Lexer

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Punct(&'static str),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Punct(p) => write!(f, "'{p}'"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '.' | '\'')
}

fn lex(text: &str) -> Result<Vec<(Tok, Span)>, DslError> {
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let at = Span { line, col };
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().expect("peeked");
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        };
        if c.is_whitespace() {
            bump(&mut chars);
        } else if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                bump(&mut chars);
            }
        } else if is_name_char(c) {
            let mut s = String::new();
            while let Some(&c) = chars.peek().filter(|&&c| is_name_char(c)) {
                s.push(c);
                bump(&mut chars);
            }
            out.push((Tok::Ident(s), at));
        } else {
            bump(&mut chars);
            let two = |next: char, chars: &mut std::iter::Peekable<std::str::Chars>| chars.peek() == Some(&next);
            let p = match c {
                '{' => "{",
                '}' => "}",
                '(' => "(",
                ')' => ")",
                ':' => ":",
                ';' => ";",
                ',' => ",",
                '<' if two('=', &mut chars) => {
                    bump(&mut chars);
                    "<="
                }
                '<' => "<",
                '-' if two('>', &mut chars) => {
                    bump(&mut chars);
                    "->"
                }
                other => {
                    return Err(DslError::Parse {
                        at,
                        expected: "a name or punctuation".into(),
                        found: format!("'{other}'"),
                    })
                }
            };
            out.push((Tok::Punct(p), at));
        }
    }
    out.push((Tok::Eof, Span { line, col }));
    Ok(out)
}

// ---------------------------------------------------------------------------
// Parser

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn error(&self, expected: &str) -> DslError {
        DslError::Parse { at: self.span(), expected: expected.into(), found: self.peek().to_string() }
    }

    fn at_punct(&self, p: &str) -> bool {
        matches!(self.peek(), Tok::Punct(q) if *q == p)
    }

    fn eat_punct(&mut self, p: &str) -> bool {
        let hit = self.at_punct(p);
        if hit {
            self.pos += 1;
        }
        hit
    }

    fn punct(&mut self, p: &str) -> Result<(), DslError> {
        if self.eat_punct(p) {
            Ok(())
        } else {
            Err(self.error(&format!("'{p}'")))
        }
    }

    fn name(&mut self, what: &str) -> Result<Name, DslError> {
        match self.peek().clone() {
            Tok::Ident(text) => {
                let span = self.span();
                self.pos += 1;
                Ok(Name { text, span })
            }
            _ => Err(self.error(what)),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), DslError> {
        match self.peek() {
            Tok::Ident(s) if s == kw => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.error(&format!("'{kw}'"))),
        }
    }

    fn at_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == kw)
    }

    fn document(&mut self) -> Result<Document, DslError> {
        let doc = if self.at_keyword("map") && matches!(self.toks[self.pos + 1].0, Tok::Punct("{")) {
            Document::Map(self.map()?)
        } else {
            Document::Space(self.space()?)
        };
        if *self.peek() != Tok::Eof {
            return Err(self.error("end of input"));
        }
        Ok(doc)
    }

    fn space(&mut self) -> Result<SpaceExpr, DslError> {
        let span = self.span();
        let head = self.name("a space")?;
        match head.text.as_str() {
            "finite" if self.at_punct("{") => {
                self.punct("{")?;
                self.keyword("elems")?;
                self.punct(":")?;
                let elems = self.list(|p| p.name("an element name"))?;
                let mut leq = Vec::new();
                if self.eat_punct(";") && self.at_keyword("leq") {
                    self.keyword("leq")?;
                    self.punct(":")?;
                    leq = self.list(Self::leq_pair)?;
                    self.eat_punct(";");
                }
                self.punct("}")?;
                Ok(SpaceExpr::Finite { elems, leq, span })
            }
            "lift" if self.at_punct("(") => {
                self.punct("(")?;
                let inner = Box::new(self.space()?);
                self.punct(")")?;
                Ok(SpaceExpr::Lift { inner, span })
            }
            "sum" if self.at_punct("(") => {
                self.punct("(")?;
                let left = Box::new(self.space()?);
                self.punct(",")?;
                let right = Box::new(self.space()?);
                self.punct(")")?;
                Ok(SpaceExpr::Sum { left, right, span })
            }
            _ => {
                let variant = if self.eat_punct("(") {
                    let v = self.name("a variant name")?;
                    self.punct(")")?;
                    Some(v)
                } else {
                    None
                };
                Ok(SpaceExpr::Atom { name: head, variant })
            }
        }
    }

    /// A possibly empty comma-separated list, ended by `;`, `}` or EOF.
    fn list<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T, DslError>) -> Result<Vec<T>, DslError> {
        let mut out = Vec::new();
        if self.at_punct(";") || self.at_punct("}") {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if !self.eat_punct(",") {
                return Ok(out);
            }
        }
    }

    fn leq_pair(&mut self) -> Result<LeqPair, DslError> {
        let lo = self.name("an element name")?;
        let strict = if self.eat_punct("<") {
            true
        } else if self.eat_punct("<=") {
            false
        } else {
            return Err(self.error("'<' or '<='"));
        };
        let hi = self.name("an element name")?;
        Ok(LeqPair { lo, hi, strict })
    }

    fn map(&mut self) -> Result<MapDoc, DslError> {
        let span = self.span();
        self.keyword("map")?;
        self.punct("{")?;
        self.keyword("from")?;
        self.punct(":")?;
        let from = self.space()?;
        self.punct(";")?;
        self.keyword("to")?;
        self.punct(":")?;
        let to = self.space()?;
        self.punct(";")?;
        let pairs_span = self.span();
        self.keyword("pairs")?;
        self.punct(":")?;
        let pairs = self.list(|p| {
            let a = p.name("an element name")?;
            p.punct("->")?;
            let b = p.name("an element name")?;
            Ok((a, b))
        })?;
        self.eat_punct(";");
        self.punct("}")?;
        Ok(MapDoc { from, to, pairs, span, pairs_span })
    }
}

pub fn parse(text: &str) -> Result<Document, DslError> {
    Parser { toks: lex(text)?, pos: 0 }.document()
}

pub fn parse_space(text: &str) -> Result<SpaceExpr, DslError> {
    match parse(text)? {
        Document::Space(s) => Ok(s),
        Document::Map(m) => Err(DslError::Parse { at: m.span, expected: "a space".into(), found: "'map'".into() }),
    }
}

pub fn parse_map(text: &str) -> Result<MapDoc, DslError> {
    match parse(text)? {
        Document::Map(m) => Ok(m),
        Document::Space(s) => Err(DslError::Parse { at: s.span(), expected: "'map'".into(), found: "a space".into() }),
    }
}

// ---------------------------------------------------------------------------
// Printer

fn join<T>(items: &[T], f: impl Fn(&T) -> String) -> String {
    items.iter().map(f).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for SpaceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceExpr::Finite { elems, leq, .. } => {
                write!(f, "finite {{ elems: {}", join(elems, |n| n.text.clone()))?;
                if !leq.is_empty() {
                    let pairs = join(leq, |p| format!("{} {} {}", p.lo.text, if p.strict { "<" } else { "<=" }, p.hi.text));
                    write!(f, "; leq: {pairs}")?;
                }
                f.write_str(" }")
            }
            SpaceExpr::Atom { name, variant: None } => f.write_str(&name.text),
            SpaceExpr::Atom { name, variant: Some(v) } => write!(f, "{}({})", name.text, v.text),
            SpaceExpr::Lift { inner, .. } => write!(f, "lift({inner})"),
            SpaceExpr::Sum { left, right, .. } => write!(f, "sum({left}, {right})"),
        }
    }
}

impl fmt::Display for MapDoc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs = join(&self.pairs, |(a, b)| format!("{} -> {}", a.text, b.text));
        write!(f, "map {{ from: {}; to: {}; pairs: {pairs} }}", self.from, self.to)
    }
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Document::Space(s) => s.fmt(f),
            Document::Map(m) => m.fmt(f),
        }
    }
}

/// The description of a named finite space: elements in index order, covering
/// pairs as strict pairs.
pub fn describe(x: &NamedSpace) -> String {
    let p = x.space.specialization();
    let mut s = format!("finite {{ elems: {}", x.names.join(", "));
    let covers = p.covers();
    if !covers.is_empty() {
        let pairs: Vec<String> = covers.iter().map(|&(a, b)| format!("{} < {}", x.names[a], x.names[b])).collect();
        s.push_str(&format!("; leq: {}", pairs.join(", ")));
    }
    s.push_str(" }");
    s
}

// ---------------------------------------------------------------------------
// Elaboration

/// A finite space with element names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedSpace {
    pub names: Vec<String>,
    pub space: FinSpace,
}

impl NamedSpace {
    /// Names `0, 1, …`.
    pub fn numbered(space: FinSpace) -> Self {
        NamedSpace { names: (0..space.size()).map(|i| i.to_string()).collect(), space }
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn set_names(&self, s: &sctop_core::Subset) -> Vec<String> {
        s.iter().map(|i| self.names[i].clone()).collect()
    }
}

pub enum Elaborated {
    Finite(NamedSpace),
    Symbolic(Box<dyn SymbolicSpace>),
}

impl fmt::Debug for Elaborated {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elaborated::Finite(x) => f.debug_tuple("Finite").field(x).finish(),
            Elaborated::Symbolic(s) => f.debug_tuple("Symbolic").field(&s.name()).finish(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedMap {
    pub from: NamedSpace,
    pub to: NamedSpace,
    pub map: SpaceMap,
}

fn atom(name: &Name, variant: &Option<Name>) -> Result<Box<dyn SymbolicSpace>, DslError> {
    let key = match (name.text.as_str(), variant) {
        (n, None) => n.to_string(),
        ("johnstone", Some(v)) if v.text == "scott" || v.text == "alex" => format!("johnstone_{}", v.text),
        (_, Some(v)) => return Err(DslError::semantic(v.span, format!("unknown variant '{}' of '{}'", v.text, name.text))),
    };
    catalog::lookup(&key).ok_or_else(|| DslError::semantic(name.span, format!("unknown space '{}'", name.text)))
}

pub fn elaborate(e: &SpaceExpr) -> Result<Elaborated, DslError> {
    match e {
        SpaceExpr::Atom { name, variant } => Ok(Elaborated::Symbolic(atom(name, variant)?)),
        _ => Ok(Elaborated::Finite(elaborate_finite(e)?)),
    }
}

fn fresh(names: &[String], base: &str) -> String {
    let mut s = base.to_string();
    while names.contains(&s) {
        s.push('\'');
    }
    s
}

pub fn elaborate_finite(e: &SpaceExpr) -> Result<NamedSpace, DslError> {
    match e {
        SpaceExpr::Atom { name, variant } => {
            atom(name, variant)?;
            Err(DslError::semantic(name.span, format!("'{}' is infinite; a finite space is required here", name.text)))
        }
        SpaceExpr::Finite { elems, leq, .. } => {
            let mut names: Vec<String> = Vec::new();
            for n in elems {
                if names.contains(&n.text) {
                    return Err(DslError::semantic(n.span, format!("duplicate element '{}'", n.text)));
                }
                names.push(n.text.clone());
            }
            if names.len() > sctop_core::subset::MAX_POINTS {
                return Err(DslError::semantic(elems[sctop_core::subset::MAX_POINTS].span, "more than 64 elements"));
            }
            let lookup = |n: &Name| {
                names
                    .iter()
                    .position(|m| *m == n.text)
                    .ok_or_else(|| DslError::semantic(n.span, format!("unknown element '{}'", n.text)))
            };
            let mut gens = Vec::new();
            for p in leq {
                let (a, b) = (lookup(&p.lo)?, lookup(&p.hi)?);
                if p.strict && a == b {
                    return Err(DslError::semantic(p.lo.span, format!("strict pair {0} < {0}", p.lo.text)));
                }
                gens.push((a, b));
            }
            let order = FinPoset::from_generators(names.len(), gens.iter().copied()).map_err(|err| {
                // Blame the first pair that closes a cycle.
                let first = (1..=gens.len())
                    .find(|&k| FinPoset::from_generators(names.len(), gens[..k].iter().copied()).is_err())
                    .map_or(e.span(), |k| leq[k - 1].lo.span);
                match err {
                    CoreError::NotAPoset { axiom: Axiom::Antisymmetry, a, b, .. } => DslError::semantic(
                        first,
                        format!("antisymmetry violated: {0} ≤ {1} and {1} ≤ {0}", names[a], names[b]),
                    ),
                    other => DslError::semantic(first, other.to_string()),
                }
            })?;
            Ok(NamedSpace { names, space: FinSpace::alexandroff(&order) })
        }
        SpaceExpr::Lift { inner, .. } => {
            let x = elaborate_finite(inner)?;
            let n = x.space.size();
            let bot = fresh(&x.names, "bot");
            let p = x.space.specialization();
            let gens = p.relation().into_iter().map(|(a, b)| (a + 1, b + 1)).chain((1..=n).map(|b| (0, b)));
            let order = FinPoset::from_generators(n + 1, gens).map_err(|err| DslError::semantic(e.span(), err.to_string()))?;
            let mut names = vec![bot];
            names.extend(x.names);
            Ok(NamedSpace { names, space: FinSpace::alexandroff(&order) })
        }
        SpaceExpr::Sum { left, right, .. } => {
            let (l, r) = (elaborate_finite(left)?, elaborate_finite(right)?);
            let (n, m) = (l.space.size(), r.space.size());
            if n + m > sctop_core::subset::MAX_POINTS {
                return Err(DslError::semantic(e.span(), "more than 64 elements"));
            }
            let gens = l
                .space
                .specialization()
                .relation()
                .into_iter()
                .chain(r.space.specialization().relation().into_iter().map(|(a, b)| (a + n, b + n)));
            let order = FinPoset::from_generators(n + m, gens).map_err(|err| DslError::semantic(e.span(), err.to_string()))?;
            let names = l.names.iter().map(|s| format!("l.{s}")).chain(r.names.iter().map(|s| format!("r.{s}"))).collect();
            Ok(NamedSpace { names, space: FinSpace::alexandroff(&order) })
        }
    }
}

pub fn elaborate_map(m: &MapDoc) -> Result<NamedMap, DslError> {
    let from = elaborate_finite(&m.from)?;
    let to = elaborate_finite(&m.to)?;
    let mut table: Vec<Option<usize>> = vec![None; from.space.size()];
    for (a, b) in &m.pairs {
        let i = from.index(&a.text).ok_or_else(|| DslError::semantic(a.span, format!("unknown source element '{}'", a.text)))?;
        let j = to.index(&b.text).ok_or_else(|| DslError::semantic(b.span, format!("unknown target element '{}'", b.text)))?;
        if table[i].is_some_and(|k| k != j) {
            return Err(DslError::semantic(a.span, format!("'{}' is mapped twice", a.text)));
        }
        table[i] = Some(j);
    }
    let table = table
        .iter()
        .enumerate()
        .map(|(i, t)| t.ok_or_else(|| DslError::semantic(m.pairs_span, format!("map is not total: '{}' has no image", from.names[i]))))
        .collect::<Result<Vec<_>, _>>()?;
    let map = SpaceMap::new(from.space.clone(), to.space.clone(), table).expect("table checked");
    Ok(NamedMap { from, to, map })
}

/// Parses and elaborates a space description.
pub fn load_space(text: &str) -> Result<Elaborated, DslError> {
    elaborate(&parse_space(text)?)
}

pub fn load_finite(text: &str) -> Result<NamedSpace, DslError> {
    elaborate_finite(&parse_space(text)?)
}

pub fn load_map(text: &str) -> Result<NamedMap, DslError> {
    elaborate_map(&parse_map(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use sctop_core::subset::powerset;

    #[test]
    fn join_poset_has_all_up_sets() {
        let x = load_finite("finite { elems: a,b,t; leq: a<t, b<t }").unwrap();
        assert_eq!(x.names, ["a", "b", "t"]);
        let p = x.space.specialization();
        let ups: Vec<_> = powerset(3).filter(|u| p.is_up_set(u)).collect();
        assert!(ups.iter().all(|u| x.space.is_open(u)));
        assert_eq!(x.space.opens().len(), ups.len());
        assert_eq!(ups.len(), 5);
    }

    #[test]
    fn atoms() {
        assert!(matches!(load_space("omega").unwrap(), Elaborated::Symbolic(s) if s.name() == "omega"));
        assert!(matches!(load_space("johnstone(alex)").unwrap(), Elaborated::Symbolic(s) if s.name() == "johnstone_alex"));
        assert!(matches!(load_space("johnstone").unwrap(), Elaborated::Symbolic(s) if s.name() == "johnstone_scott"));
        let err = load_space("lift(omega)").unwrap_err();
        assert_eq!(err.span(), Span { line: 1, col: 6 });
    }

    #[test]
    fn stray_token_is_positioned() {
        let err = parse("finite { elems: a; leq: a<a? }").unwrap_err();
        assert_eq!(
            err,
            DslError::Parse { at: Span { line: 1, col: 28 }, expected: "a name or punctuation".into(), found: "'?'".into() }
        );
    }

    #[test]
    fn semantic_errors() {
        let e = load_finite("finite { elems: a, b, a }").unwrap_err();
        assert_eq!(e.span(), Span { line: 1, col: 23 });
        let e = load_finite("finite { elems: a, b; leq: a < b, b < a }").unwrap_err();
        assert!(e.to_string().contains("antisymmetry violated: a ≤ b and b ≤ a"), "{e}");
        let e = load_finite("finite {\n  elems: a;\n  leq: a < c\n}").unwrap_err();
        assert_eq!(e, DslError::Semantic { at: Span { line: 3, col: 12 }, message: "unknown element 'c'".into() });
        let e = load_map("map { from: finite { elems: a, b }; to: finite { elems: x }; pairs: a -> x }").unwrap_err();
        assert!(e.to_string().contains("'b' has no image"));
    }

    #[test]
    fn lift_and_sum() {
        let x = load_finite("lift(finite { elems: bot, a })").unwrap();
        assert_eq!(x.names, ["bot'", "bot", "a"]);
        assert!(x.space.specialization().leq(0, 2));
        let y = load_finite("sum(finite { elems: a; }, lift(finite { elems: a }))").unwrap();
        assert_eq!(y.names, ["l.a", "r.bot", "r.a"]);
        assert!(y.space.specialization().leq(1, 2) && !y.space.specialization().leq(0, 2));
    }

    #[test]
    fn printing_is_canonical() {
        let d = parse("map{from:finite{elems:a,b;leq:a<=b;};to:sum(omega,johnstone(scott));pairs:a->x,}").unwrap_err();
        assert!(matches!(d, DslError::Parse { .. }));
        let d = parse("map{from:finite{elems:a,b;leq:a<=b;};to:sum(omega,johnstone(scott));pairs:a->x}").unwrap();
        let printed = d.to_string();
        assert_eq!(
            printed,
            "map { from: finite { elems: a, b; leq: a <= b }; to: sum(omega, johnstone(scott)); pairs: a -> x }"
        );
        assert_eq!(parse(&printed).unwrap().to_string(), printed);
    }
}
