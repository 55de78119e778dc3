//! The algebra file format: parsing with line-numbered diagnostics and a
//! normalized serialization.
//!
//! ```text
//! file      := { statement (NEWLINE | ';') }
//! statement := 'p' '=' INT
//!            | ('even' | 'odd') '=' names
//!            | '[' NAME ',' NAME ']' '=' combo
//!            | NAME '^[p]' '=' combo
//!            | 'module' NAME '{' { module-stmt (NEWLINE | ';') } '}'
//! module-stmt := 'parity' '=' '[' BIT { ',' BIT } ']'
//!              | NAME '=' '[' row { '|' row } ']'
//! names     := '[' [ NAME { ',' NAME } ] ']' | NAME { ',' NAME }
//! combo     := '0' | term { ('+' | '-') term }
//! term      := [ INT [ '*' ] ] NAME
//! row       := INT { (',' | ' ') INT }
//! ```
//!
//! `#` starts a comment. `p` defaults to 3; omitted brackets, restrictions
//! and action matrices are zero. A bracket may be restated only consistently.
//! A module action matrix has one row per basis vector of the module; column
//! k is the image of m_k.

use std::fmt::Write as _;
use supercohom::fplinalg::{DenseMatrix, PrimeField};
use supercohom::grading::Parity;
use supercohom::liesuper::{validate_algebra, validate_supermodule, LieSuperAlgebraSpec, SupermoduleSpec, Violation};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ValidationError {
    #[error("{}: {violation}", line.map_or_else(|| "algebra".to_string(), |l| format!("line {l}")))]
    Algebra { line: Option<usize>, violation: String },
    #[error("module '{module}': {violation}")]
    Module { module: String, violation: String },
}

/// A parsed algebra together with its user-declared modules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub spec: LieSuperAlgebraSpec,
    pub modules: Vec<SupermoduleSpec>,
}

impl AlgebraDocument {
    pub fn new(spec: LieSuperAlgebraSpec) -> Self {
        AlgebraDocument { spec, modules: Vec::new() }
    }

    /// `k`/`trivial`, `adjoint`, or a declared module.
    pub fn module(&self, name: &str) -> Option<SupermoduleSpec> {
        match name {
            "k" | "trivial" => Some(SupermoduleSpec::trivial(&self.spec)),
            "adjoint" | "ad" => Some(SupermoduleSpec::adjoint(&self.spec)),
            _ => self.modules.iter().find(|m| m.name == name).cloned(),
        }
    }
}

#[derive(Debug)]
enum Stmt {
    Prime(u32),
    Even(Vec<String>),
    Odd(Vec<String>),
    Bracket(String, String, Vec<(String, i64)>),
    Restriction(String, Vec<(String, i64)>),
    Module { name: String, parity: Option<Vec<u8>>, actions: Vec<(usize, String, Vec<Vec<i64>>)> },
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_') && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

fn parse_names(line: usize, s: &str) -> Result<Vec<String>, ParseError> {
    let inner = s.trim().strip_prefix('[').map_or(Ok(s.trim()), |r| r.strip_suffix(']').ok_or_else(|| err(line, "missing ']' in name list")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|n| {
            let n = n.trim();
            if is_name(n) {
                Ok(n.to_string())
            } else {
                Err(err(line, format!("invalid basis name '{n}'")))
            }
        })
        .collect()
}

fn parse_combo(line: usize, s: &str) -> Result<Vec<(String, i64)>, ParseError> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s == "0" {
        return Ok(Vec::new());
    }
    if s.is_empty() {
        return Err(err(line, "empty linear combination"));
    }
    let mut terms = Vec::new();
    let mut rest = s.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let mut sign = 1i64;
        if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        } else if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        } else if !first {
            return Err(err(line, format!("expected '+' or '-' before '{rest}'")));
        }
        first = false;
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let term = &rest[..end];
        rest = &rest[end..];
        let digits = term.chars().take_while(|c| c.is_ascii_digit()).count();
        let (coef, name) = term.split_at(digits);
        let name = name.strip_prefix('*').unwrap_or(name);
        let coef: i64 = if coef.is_empty() { 1 } else { coef.parse().map_err(|_| err(line, format!("bad coefficient in '{term}'")))? };
        if !is_name(name) {
            return Err(err(line, format!("invalid term '{term}'")));
        }
        terms.push((name.to_string(), sign * coef));
    }
    Ok(terms)
}

fn parse_int(line: usize, s: &str) -> Result<i64, ParseError> {
    s.trim().parse().map_err(|_| err(line, format!("expected an integer, found '{}'", s.trim())))
}

fn parse_matrix(line: usize, s: &str) -> Result<Vec<Vec<i64>>, ParseError> {
    let inner = s.trim().strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(|| err(line, "matrix must be enclosed in [ ]"))?;
    inner
        .split('|')
        .map(|row| row.split([',', ' ']).filter(|t| !t.trim().is_empty()).map(|t| parse_int(line, t)).collect())
        .collect()
}

/// Split into (line number, statement) pairs.
fn statements(text: &str) -> Vec<(usize, String)> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        for piece in content.split(';') {
            let piece = piece.trim();
            if !piece.is_empty() {
                out.push((i + 1, piece.to_string()));
            }
        }
    }
    out
}

fn parse_statements(text: &str) -> Result<Vec<(usize, Stmt)>, ParseError> {
    let mut out = Vec::new();
    let mut iter = statements(text).into_iter();
    while let Some((line, st)) = iter.next() {
        if let Some(rest) = st.strip_prefix("module") {
            let header = rest.trim();
            let name = header.strip_suffix('{').map(str::trim).ok_or_else(|| err(line, "expected 'module NAME {'"))?;
            if !is_name(name) {
                return Err(err(line, format!("invalid module name '{name}'")));
            }
            let mut parity = None;
            let mut actions = Vec::new();
            let mut closed = false;
            for (l2, inner) in iter.by_ref() {
                if inner == "}" {
                    closed = true;
                    break;
                }
                let (lhs, rhs) = inner.split_once('=').ok_or_else(|| err(l2, "expected '=' in module block"))?;
                let lhs = lhs.trim();
                if lhs == "parity" {
                    let bits = rhs.trim().strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(|| err(l2, "parity must be a [ ] list"))?;
                    let bits = bits
                        .split(',')
                        .map(|b| match b.trim() {
                            "0" => Ok(0u8),
                            "1" => Ok(1u8),
                            other => Err(err(l2, format!("parity entries are 0 or 1, found '{other}'"))),
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    parity = Some(bits);
                } else if is_name(lhs) {
                    actions.push((l2, lhs.to_string(), parse_matrix(l2, rhs)?));
                } else {
                    return Err(err(l2, format!("unexpected '{lhs}' in module block")));
                }
            }
            if !closed {
                return Err(err(line, format!("module '{name}' is not closed by '}}'")));
            }
            out.push((line, Stmt::Module { name: name.to_string(), parity, actions }));
            continue;
        }
        let (lhs, rhs) = st.split_once('=').ok_or_else(|| err(line, format!("expected '=' in '{st}'")))?;
        let lhs = lhs.trim();
        let stmt = if lhs == "p" {
            let v = parse_int(line, rhs)?;
            Stmt::Prime(u32::try_from(v).map_err(|_| err(line, "p must be a positive prime"))?)
        } else if lhs == "even" {
            Stmt::Even(parse_names(line, rhs)?)
        } else if lhs == "odd" {
            Stmt::Odd(parse_names(line, rhs)?)
        } else if let Some(inner) = lhs.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let (a, b) = inner.split_once(',').ok_or_else(|| err(line, "bracket needs two entries"))?;
            Stmt::Bracket(a.trim().to_string(), b.trim().to_string(), parse_combo(line, rhs)?)
        } else if let Some(name) = lhs.strip_suffix("^[p]") {
            Stmt::Restriction(name.trim().to_string(), parse_combo(line, rhs)?)
        } else {
            return Err(err(line, format!("unrecognized statement '{st}'")));
        };
        out.push((line, stmt));
    }
    Ok(out)
}

/// Errors from [`parse_algebra`]: a syntax problem or a failed identity.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DocumentError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("validation failed at {0}")]
    Validation(#[from] ValidationError),
}

/// Parse without running the identity checks.
pub fn parse_unvalidated(text: &str) -> Result<(AlgebraDocument, Vec<BracketLine>), ParseError> {
    let stmts = parse_statements(text)?;
    let mut p = 3u32;
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for (_, s) in &stmts {
        match s {
            Stmt::Prime(q) => p = *q,
            Stmt::Even(v) => even.extend(v.iter().cloned()),
            Stmt::Odd(v) => odd.extend(v.iter().cloned()),
            _ => {}
        }
    }
    let first = stmts.first().map_or(1, |(l, _)| *l);
    let field = PrimeField::new(p).map_err(|e| err(first, e.to_string()))?;
    let e: Vec<&str> = even.iter().map(String::as_str).collect();
    let o: Vec<&str> = odd.iter().map(String::as_str).collect();
    let mut spec = LieSuperAlgebraSpec::new(field, &e, &o).map_err(|e| err(first, e.to_string()))?;
    let mut modules: Vec<SupermoduleSpec> = Vec::new();
    let mut lines = Vec::new();
    for (line, s) in stmts {
        let resolve = |combo: &[(String, i64)]| -> Result<Vec<(usize, i64)>, ParseError> {
            combo.iter().map(|(n, c)| Ok((spec.index(n).map_err(|e| err(line, e.to_string()))?, *c))).collect()
        };
        match s {
            Stmt::Bracket(a, b, combo) => {
                let i = spec.index(&a).map_err(|e| err(line, e.to_string()))?;
                let j = spec.index(&b).map_err(|e| err(line, e.to_string()))?;
                let cs = resolve(&combo)?;
                let before = spec.bracket(i, j).to_vec();
                spec.set_bracket(i, j, &cs).map_err(|e| err(line, e.to_string()))?;
                let earlier = lines.iter().find(|b: &&BracketLine| (b.i, b.j) == (i, j) || (b.i, b.j) == (j, i));
                if let Some(prev) = earlier.filter(|_| spec.bracket(i, j) != before.as_slice()) {
                    return Err(err(line, format!("bracket [{a},{b}] contradicts line {}", prev.line)));
                }
                lines.push(BracketLine { line, i, j });
            }
            Stmt::Restriction(a, combo) => {
                let i = spec.index(&a).map_err(|e| err(line, e.to_string()))?;
                let cs = resolve(&combo)?;
                spec.set_restriction(i, &cs).map_err(|e| err(line, e.to_string()))?;
            }
            Stmt::Module { name, parity, actions } => {
                let parity = parity.ok_or_else(|| err(line, format!("module '{name}' lacks a parity line")))?;
                if modules.iter().any(|m| m.name == name) || name == "k" || name == "adjoint" {
                    return Err(err(line, format!("module name '{name}' is already taken")));
                }
                let d = parity.len();
                let mut action = vec![DenseMatrix::zero(d, d); spec.dim()];
                for (l2, g, rows) in actions {
                    let a = spec.index(&g).map_err(|e| err(l2, e.to_string()))?;
                    if rows.len() != d || rows.iter().any(|r| r.len() != d) {
                        return Err(err(l2, format!("action of '{g}' must be a {d}x{d} matrix")));
                    }
                    action[a] = DenseMatrix::from_rows(field, &rows).map_err(|e| err(l2, e.to_string()))?;
                }
                let parity = parity.into_iter().map(|b| if b == 1 { Parity::Odd } else { Parity::Even }).collect();
                modules.push(SupermoduleSpec { name, parity, action });
            }
            _ => {}
        }
    }
    Ok((AlgebraDocument { spec, modules }, lines))
}

/// Source line of a bracket statement, used to locate validation witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BracketLine {
    pub line: usize,
    pub i: usize,
    pub j: usize,
}

fn violation_line(v: &Violation, lines: &[BracketLine]) -> Option<usize> {
    let hit = |a: usize, b: usize| lines.iter().rev().find(|l| (l.i, l.j) == (a, b) || (l.i, l.j) == (b, a)).map(|l| l.line);
    match *v {
        Violation::SkewSymmetry { i, j } | Violation::Parity { i, j, .. } => hit(i, j),
        Violation::Jacobi { i, j, k } => hit(i, j).or_else(|| hit(j, k)).or_else(|| hit(i, k)),
        _ => None,
    }
}

fn describe(spec: &LieSuperAlgebraSpec, v: &Violation) -> String {
    let name = |i: usize| spec.basis().name(i).to_string();
    match *v {
        Violation::Parity { i, j, k } => format!("parity rule fails: [{},{}] has a component on {} of the wrong parity", name(i), name(j), name(k)),
        Violation::Jacobi { i, j, k } => format!("super Jacobi identity fails on ({},{},{})", name(i), name(j), name(k)),
        Violation::SkewSymmetry { i, j } => format!("super skew-symmetry fails for ({},{})", name(i), name(j)),
        _ => v.to_string(),
    }
}

/// Run the identity checks on a document.
pub fn validate_document(doc: &AlgebraDocument, lines: &[BracketLine]) -> Result<(), ValidationError> {
    if let Some(v) = validate_algebra(&doc.spec).violations.first() {
        return Err(ValidationError::Algebra { line: violation_line(v, lines), violation: describe(&doc.spec, v) });
    }
    for m in &doc.modules {
        if let Some(v) = validate_supermodule(m, &doc.spec, true).violations.first() {
            return Err(ValidationError::Module { module: m.name.clone(), violation: v.to_string() });
        }
    }
    Ok(())
}

/// Parse and validate.
pub fn parse_algebra(text: &str) -> Result<AlgebraDocument, DocumentError> {
    let (doc, lines) = parse_unvalidated(text)?;
    validate_document(&doc, &lines)?;
    Ok(doc)
}

fn write_combo(out: &mut String, spec: &LieSuperAlgebraSpec, v: &[u32]) {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| if c == 1 { spec.basis().name(k).to_string() } else { format!("{c}{}", spec.basis().name(k)) })
        .collect();
    if terms.is_empty() {
        out.push('0');
    } else {
        out.push_str(&terms.join(" + "));
    }
}

/// Normalized text: coefficients in 1..p, brackets [e_i,e_j] with i ≤ j.
pub fn serialize(doc: &AlgebraDocument) -> String {
    let spec = &doc.spec;
    let b = spec.basis();
    let mut out = String::new();
    writeln!(out, "p = {}", spec.field().p()).unwrap();
    writeln!(out, "even = [{}]", b.even.join(", ")).unwrap();
    writeln!(out, "odd = [{}]", b.odd.join(", ")).unwrap();
    for i in 0..spec.dim() {
        for j in i..spec.dim() {
            let v = spec.bracket(i, j);
            if v.iter().any(|&c| c != 0) {
                write!(out, "[{},{}] = ", b.name(i), b.name(j)).unwrap();
                write_combo(&mut out, spec, v);
                out.push('\n');
            }
        }
    }
    for i in 0..spec.s() {
        let v = spec.restriction(i);
        if v.iter().any(|&c| c != 0) {
            write!(out, "{}^[p] = ", b.name(i)).unwrap();
            write_combo(&mut out, spec, v);
            out.push('\n');
        }
    }
    for m in &doc.modules {
        writeln!(out, "module {} {{", m.name).unwrap();
        let bits: Vec<&str> = m.parity.iter().map(|p| if p.is_odd() { "1" } else { "0" }).collect();
        writeln!(out, "  parity = [{}]", bits.join(", ")).unwrap();
        for (a, rho) in m.action.iter().enumerate() {
            if rho.is_zero() {
                continue;
            }
            let rows: Vec<String> = (0..rho.rows()).map(|r| rho.row(r).iter().map(u32::to_string).collect::<Vec<_>>().join(" ")).collect();
            writeln!(out, "  {} = [{}]", b.name(a), rows.join(" | ")).unwrap();
        }
        out.push_str("}\n");
    }
    out
}

/// The text hashed for report fingerprints.
pub fn fingerprint_input(doc: &AlgebraDocument) -> String {
    serialize(doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_file_is_k1() {
        let doc = parse_algebra("p=3; odd=[y]").unwrap();
        assert_eq!((doc.spec.s(), doc.spec.t()), (0, 1));
        assert!(doc.spec.is_abelian());
    }

    #[test]
    fn wrong_parity_is_reported_with_its_line() {
        let text = "p = 3\neven = [h]\nodd = [y, z]\n[y,z] = y\n";
        match parse_algebra(text) {
            Err(DocumentError::Validation(ValidationError::Algebra { line, violation })) => {
                assert_eq!(line, Some(4));
                assert!(violation.contains("parity rule"), "{violation}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let e = parse_algebra("p = 3\neven = [x]\n[x,q] = x\n").unwrap_err();
        assert!(matches!(e, DocumentError::Parse(ParseError { line: 3, .. })), "{e:?}");
        let e = parse_algebra("p = 3\nodd = y\nwhat\n").unwrap_err();
        assert!(matches!(e, DocumentError::Parse(ParseError { line: 3, .. })));
        let e = parse_algebra("p = 4\n").unwrap_err();
        assert!(matches!(e, DocumentError::Parse(ParseError { line: 1, .. })));
        let e = parse_algebra("p = 5\neven = [h, e]\n[h,e] = e\n[e,h] = 2e\n").unwrap_err();
        assert!(matches!(e, DocumentError::Parse(ParseError { line: 4, .. })), "{e:?}");
    }

    #[test]
    fn combos_and_modules() {
        let text = "p = 5\neven = h, e\n[h,e] = 2*e\n[e,h] = -2e   # same entry\nh^[p] = h\nmodule two {\n  parity = [0, 0]\n  h = [1 0 | 0 4]\n  e = [0 1 | 0 0]\n}\n";
        let doc = parse_algebra(text).unwrap();
        assert_eq!(doc.spec.bracket(0, 1), &[0, 2]);
        assert_eq!(doc.modules.len(), 1);
        assert!(doc.module("two").is_some());
        let again = parse_algebra(&serialize(&doc)).unwrap();
        assert_eq!(again, doc);
    }
}
