//! Parser for the `.lgl` text format.
//!
//! ```text
//! % shortest paths from v0
//! pred edge(obj, obj, int).
//! pred sp(obj, min int).
//!
//! sp(v0, 0).
//! sp(Y, M + N) :- sp(X, M), edge(X, Y, N).
//! ```
//!
//! Declarations list one sort per position: `obj`, `int`, `min int` or
//! `max int`; the limit sorts may only appear in the last position.
//! Variables start with an uppercase letter, object constants with a
//! lowercase letter. Comparison atoms are parenthesized, `(X < Y)` or
//! `(X <= Y)`. Arithmetic uses `+`, `-`, `*` with the usual precedence.
//! `%` starts a line comment. The token `inf` is reserved and never
//! accepted in source programs.

use std::collections::BTreeMap;
use std::fmt;

use num::BigInt;
use thiserror::Error;

use crate::ast::{
    Arg, CmpAtom, CmpOp, Decls, NumTerm, ObjectTerm, PredicateDecl, PredicateKind, Program, Rule,
    Sort, Span, StdAtom, INT_BUILTIN,
};
use crate::interp::GroundFact;
use crate::validate::{validate, Severity};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{span}: {message}")]
pub struct ParseError {
    pub message: String,
    pub span: Span,
}

impl ParseError {
    fn new(message: impl Into<String>, span: Span) -> Self {
        ParseError { message: message.into(), span }
    }
}

const RESERVED: &[&str] = &["pred", "obj", "int", "min", "max", "inf"];

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Var(String),
    Int(BigInt),
    Builtin,
    KwPred,
    KwObj,
    KwInt,
    KwMin,
    KwMax,
    LParen,
    RParen,
    Comma,
    Dot,
    Turnstile,
    Lt,
    Le,
    Plus,
    Minus,
    Star,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "'{}'", s),
            Tok::Var(s) => write!(f, "'{}'", s),
            Tok::Int(v) => write!(f, "'{}'", v),
            Tok::Builtin => write!(f, "'{}'", INT_BUILTIN),
            Tok::KwPred => write!(f, "'pred'"),
            Tok::KwObj => write!(f, "'obj'"),
            Tok::KwInt => write!(f, "'int'"),
            Tok::KwMin => write!(f, "'min'"),
            Tok::KwMax => write!(f, "'max'"),
            Tok::LParen => write!(f, "'('"),
            Tok::RParen => write!(f, "')'"),
            Tok::Comma => write!(f, "','"),
            Tok::Dot => write!(f, "'.'"),
            Tok::Turnstile => write!(f, "':-'"),
            Tok::Lt => write!(f, "'<'"),
            Tok::Le => write!(f, "'<='"),
            Tok::Plus => write!(f, "'+'"),
            Tok::Minus => write!(f, "'-'"),
            Tok::Star => write!(f, "'*'"),
        }
    }
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer { chars: text.chars().peekable(), line: 1, col: 1 }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn tokenize(mut self) -> Result<Vec<(Tok, Span)>, ParseError> {
        let mut out = Vec::new();
        loop {
            while let Some(&c) = self.chars.peek() {
                if c == '%' {
                    while let Some(&d) = self.chars.peek() {
                        if d == '\n' {
                            break;
                        }
                        self.bump();
                    }
                } else if c.is_whitespace() {
                    self.bump();
                } else {
                    break;
                }
            }
            let span = Span { line: self.line, col: self.col };
            let Some(&c) = self.chars.peek() else { break };
            let tok = match c {
                '(' => {
                    self.bump();
                    Tok::LParen
                }
                ')' => {
                    self.bump();
                    Tok::RParen
                }
                ',' => {
                    self.bump();
                    Tok::Comma
                }
                '.' => {
                    self.bump();
                    Tok::Dot
                }
                '+' => {
                    self.bump();
                    Tok::Plus
                }
                '-' => {
                    self.bump();
                    Tok::Minus
                }
                '*' => {
                    self.bump();
                    Tok::Star
                }
                '<' => {
                    self.bump();
                    if self.chars.peek() == Some(&'=') {
                        self.bump();
                        Tok::Le
                    } else {
                        Tok::Lt
                    }
                }
                ':' => {
                    self.bump();
                    if self.chars.peek() == Some(&'-') {
                        self.bump();
                        Tok::Turnstile
                    } else {
                        return Err(ParseError::new("expected ':-'", span));
                    }
                }
                '@' => {
                    self.bump();
                    let word = self.take_word();
                    if word == "int" {
                        Tok::Builtin
                    } else {
                        return Err(ParseError::new(format!("unknown builtin '@{}'", word), span));
                    }
                }
                c if c.is_ascii_digit() => {
                    let mut digits = String::new();
                    while let Some(&d) = self.chars.peek() {
                        if d.is_ascii_digit() {
                            digits.push(d);
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    Tok::Int(digits.parse().expect("digits form an integer"))
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let word = self.take_word();
                    match word.as_str() {
                        "pred" => Tok::KwPred,
                        "obj" => Tok::KwObj,
                        "int" => Tok::KwInt,
                        "min" => Tok::KwMin,
                        "max" => Tok::KwMax,
                        "inf" => {
                            return Err(ParseError::new(
                                "'inf' is reserved and cannot appear in source programs",
                                span,
                            ))
                        }
                        _ if word.chars().next().unwrap().is_ascii_uppercase() => Tok::Var(word),
                        _ => Tok::Ident(word),
                    }
                }
                other => {
                    return Err(ParseError::new(format!("unexpected character '{}'", other), span))
                }
            };
            out.push((tok, span));
        }
        Ok(out)
    }

    fn take_word(&mut self) -> String {
        let mut word = String::new();
        while let Some(&d) = self.chars.peek() {
            if d.is_ascii_alphanumeric() || d == '_' {
                word.push(d);
                self.bump();
            } else {
                break;
            }
        }
        word
    }
}

/// A term before sort resolution.
#[derive(Clone, Debug)]
enum PTerm {
    Int(BigInt),
    Ident(String),
    Var(String),
    Add(Box<PTerm>, Box<PTerm>),
    Sub(Box<PTerm>, Box<PTerm>),
    Mul(Box<PTerm>, Box<PTerm>),
}

impl PTerm {
    fn is_arith(&self) -> bool {
        matches!(self, PTerm::Add(..) | PTerm::Sub(..) | PTerm::Mul(..) | PTerm::Int(_))
    }
}

#[derive(Debug)]
struct PAtom {
    pred: String,
    args: Vec<PTerm>,
    span: Span,
}

#[derive(Debug)]
enum PBody {
    Atom(PAtom),
    Cmp { op: CmpOp, lhs: PTerm, rhs: PTerm, span: Span },
}

#[derive(Debug)]
struct PClause {
    head: PAtom,
    body: Vec<PBody>,
    span: Span,
}

#[derive(Debug)]
enum PItem {
    Decl(PredicateDecl, Span),
    Clause(PClause),
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn span(&self) -> Span {
        self.toks
            .get(self.pos)
            .or_else(|| self.toks.last())
            .map(|(_, s)| *s)
            .unwrap_or(Span { line: 1, col: 1 })
    }

    fn bump(&mut self) -> Option<(Tok, Span)> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, tok: Tok) -> Result<Span, ParseError> {
        match self.bump() {
            Some((t, s)) if t == tok => Ok(s),
            Some((t, s)) => Err(ParseError::new(format!("expected {}, found {}", tok, t), s)),
            None => Err(ParseError::new(format!("expected {}, found end of input", tok), self.span())),
        }
    }

    fn parse_items(&mut self) -> Result<Vec<PItem>, ParseError> {
        let mut items = Vec::new();
        while self.peek().is_some() {
            if self.peek() == Some(&Tok::KwPred) {
                items.push(self.parse_decl()?);
            } else {
                items.push(PItem::Clause(self.parse_clause()?));
            }
        }
        Ok(items)
    }

    fn parse_decl(&mut self) -> Result<PItem, ParseError> {
        let span = self.expect(Tok::KwPred)?;
        let name = match self.bump() {
            Some((Tok::Ident(n), _)) => n,
            Some((t, s)) => {
                return Err(ParseError::new(format!("expected predicate name, found {}", t), s))
            }
            None => return Err(ParseError::new("expected predicate name", self.span())),
        };
        self.expect(Tok::LParen)?;
        let mut sorts = Vec::new();
        let mut kind = PredicateKind::Object;
        if self.peek() != Some(&Tok::RParen) {
            loop {
                let (sort, position_kind) = self.parse_sort()?;
                sorts.push(sort);
                if let Some(k) = position_kind {
                    kind = k;
                }
                if self.peek() == Some(&Tok::Comma) {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect(Tok::RParen)?;
        self.expect(Tok::Dot)?;
        if kind == PredicateKind::Object && sorts.contains(&Sort::Numeric) {
            kind = PredicateKind::OrdinaryNumeric;
        }
        let decl = PredicateDecl { name, sorts, kind };
        Ok(PItem::Decl(decl, span))
    }

    fn parse_sort(&mut self) -> Result<(Sort, Option<PredicateKind>), ParseError> {
        match self.bump() {
            Some((Tok::KwObj, _)) => Ok((Sort::Object, None)),
            Some((Tok::KwInt, _)) => Ok((Sort::Numeric, None)),
            Some((Tok::KwMin, _)) => {
                self.expect(Tok::KwInt)?;
                Ok((Sort::Numeric, Some(PredicateKind::MinLimit)))
            }
            Some((Tok::KwMax, _)) => {
                self.expect(Tok::KwInt)?;
                Ok((Sort::Numeric, Some(PredicateKind::MaxLimit)))
            }
            Some((t, s)) => Err(ParseError::new(format!("expected a sort, found {}", t), s)),
            None => Err(ParseError::new("expected a sort", self.span())),
        }
    }

    fn parse_clause(&mut self) -> Result<PClause, ParseError> {
        let span = self.span();
        let head = self.parse_atom()?;
        let mut body = Vec::new();
        if self.peek() == Some(&Tok::Turnstile) {
            self.bump();
            loop {
                body.push(self.parse_body_elem()?);
                if self.peek() == Some(&Tok::Comma) {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect(Tok::Dot)?;
        Ok(PClause { head, body, span })
    }

    fn parse_body_elem(&mut self) -> Result<PBody, ParseError> {
        if self.peek() == Some(&Tok::LParen) {
            let span = self.span();
            self.bump();
            let lhs = self.parse_term()?;
            let op = match self.bump() {
                Some((Tok::Lt, _)) => CmpOp::Lt,
                Some((Tok::Le, _)) => CmpOp::Le,
                Some((t, s)) => {
                    return Err(ParseError::new(format!("expected '<' or '<=', found {}", t), s))
                }
                None => return Err(ParseError::new("expected comparison operator", self.span())),
            };
            let rhs = self.parse_term()?;
            self.expect(Tok::RParen)?;
            Ok(PBody::Cmp { op, lhs, rhs, span })
        } else {
            Ok(PBody::Atom(self.parse_atom()?))
        }
    }

    fn parse_atom(&mut self) -> Result<PAtom, ParseError> {
        let span = self.span();
        let pred = match self.bump() {
            Some((Tok::Ident(n), _)) => n,
            Some((Tok::Builtin, _)) => INT_BUILTIN.to_string(),
            Some((t, s)) => {
                return Err(ParseError::new(format!("expected an atom, found {}", t), s))
            }
            None => return Err(ParseError::new("expected an atom", self.span())),
        };
        let mut args = Vec::new();
        if self.peek() == Some(&Tok::LParen) {
            self.bump();
            if self.peek() != Some(&Tok::RParen) {
                loop {
                    args.push(self.parse_term()?);
                    if self.peek() == Some(&Tok::Comma) {
                        self.bump();
                    } else {
                        break;
                    }
                }
            }
            self.expect(Tok::RParen)?;
        }
        Ok(PAtom { pred, args, span })
    }

    fn parse_term(&mut self) -> Result<PTerm, ParseError> {
        let mut lhs = self.parse_mul()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = PTerm::Add(Box::new(lhs), Box::new(self.parse_mul()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = PTerm::Sub(Box::new(lhs), Box::new(self.parse_mul()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn parse_mul(&mut self) -> Result<PTerm, ParseError> {
        let mut lhs = self.parse_unary()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            lhs = PTerm::Mul(Box::new(lhs), Box::new(self.parse_unary()?));
        }
        Ok(lhs)
    }

    fn parse_unary(&mut self) -> Result<PTerm, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            let inner = self.parse_unary()?;
            return Ok(match inner {
                PTerm::Int(v) => PTerm::Int(-v),
                other => PTerm::Sub(Box::new(PTerm::Int(BigInt::from(0))), Box::new(other)),
            });
        }
        match self.bump() {
            Some((Tok::Int(v), _)) => Ok(PTerm::Int(v)),
            Some((Tok::Ident(n), _)) => Ok(PTerm::Ident(n)),
            Some((Tok::Var(v), _)) => Ok(PTerm::Var(v)),
            Some((Tok::LParen, _)) => {
                let inner = self.parse_term()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Some((t, s)) => Err(ParseError::new(format!("expected a term, found {}", t), s)),
            None => Err(ParseError::new("expected a term", self.span())),
        }
    }
}

/// Resolves sorts and checks one clause against the declarations.
struct Lowerer<'a> {
    decls: &'a Decls,
    var_sorts: BTreeMap<String, Sort>,
    span: Span,
}

impl<'a> Lowerer<'a> {
    fn new(decls: &'a Decls, span: Span) -> Self {
        Lowerer { decls, var_sorts: BTreeMap::new(), span }
    }

    fn record_var(&mut self, name: &str, sort: Sort) -> Result<(), ParseError> {
        match self.var_sorts.get(name) {
            Some(prev) if *prev != sort => Err(ParseError::new(
                format!("variable '{}' used with both object and numeric sort", name),
                self.span,
            )),
            _ => {
                self.var_sorts.insert(name.to_string(), sort);
                Ok(())
            }
        }
    }

    fn lower_num(&mut self, t: &PTerm) -> Result<NumTerm, ParseError> {
        match t {
            PTerm::Int(v) => Ok(NumTerm::Int(v.clone())),
            PTerm::Var(v) => {
                self.record_var(v, Sort::Numeric)?;
                Ok(NumTerm::Var(v.clone()))
            }
            PTerm::Ident(n) => Err(ParseError::new(
                format!("object constant '{}' in a numeric position", n),
                self.span,
            )),
            PTerm::Add(a, b) => Ok(NumTerm::add(self.lower_num(a)?, self.lower_num(b)?)),
            PTerm::Sub(a, b) => Ok(NumTerm::sub(self.lower_num(a)?, self.lower_num(b)?)),
            PTerm::Mul(a, b) => Ok(NumTerm::mul(self.lower_num(a)?, self.lower_num(b)?)),
        }
    }

    fn lower_atom(&mut self, atom: &PAtom) -> Result<StdAtom, ParseError> {
        self.span = atom.span;
        let decl = self.decls.get(&atom.pred).ok_or_else(|| {
            ParseError::new(format!("undeclared predicate '{}'", atom.pred), atom.span)
        })?;
        if decl.arity() != atom.args.len() {
            return Err(ParseError::new(
                format!(
                    "'{}' expects {} arguments, got {}",
                    atom.pred,
                    decl.arity(),
                    atom.args.len()
                ),
                atom.span,
            ));
        }
        let mut args = Vec::new();
        for (arg, sort) in atom.args.iter().zip(decl.sorts.iter()) {
            match sort {
                Sort::Object => match arg {
                    PTerm::Ident(n) => args.push(Arg::Object(ObjectTerm::Const(n.clone()))),
                    PTerm::Var(v) => {
                        self.record_var(v, Sort::Object)?;
                        args.push(Arg::Object(ObjectTerm::Var(v.clone())));
                    }
                    other if other.is_arith() => {
                        return Err(ParseError::new(
                            format!("numeric term in object position of '{}'", atom.pred),
                            atom.span,
                        ))
                    }
                    _ => unreachable!("PTerm variants covered"),
                },
                Sort::Numeric => {
                    let term = self.lower_num(arg)?;
                    args.push(Arg::Num(term.fold()));
                }
            }
        }
        Ok(StdAtom { pred: atom.pred.clone(), args })
    }
}

fn lower_clause(decls: &Decls, clause: &PClause) -> Result<Rule, ParseError> {
    let mut lowerer = Lowerer::new(decls, clause.span);
    let head = lowerer.lower_atom(&clause.head)?;
    let mut body_std = Vec::new();
    let mut body_cmp = Vec::new();
    for elem in &clause.body {
        match elem {
            PBody::Atom(atom) => body_std.push(lowerer.lower_atom(atom)?),
            PBody::Cmp { op, lhs, rhs, span } => {
                lowerer.span = *span;
                body_cmp.push(CmpAtom {
                    op: *op,
                    lhs: lowerer.lower_num(lhs)?.fold(),
                    rhs: lowerer.lower_num(rhs)?.fold(),
                });
            }
        }
    }
    let mut rule = Rule { head, body_std, body_cmp, span: Some(clause.span) };
    // Evaluate ground fact arguments eagerly so interpretations only ever
    // see plain integers.
    if rule.is_fact() {
        for arg in &mut rule.head.args {
            if let Arg::Num(t) = arg {
                *arg = Arg::Num(t.fold());
            }
        }
    }
    Ok(rule)
}

/// Parses a program and checks it is a well-formed limit program.
pub fn parse_program(text: &str) -> Result<Program, ParseError> {
    let toks = Lexer::new(text).tokenize()?;
    let mut parser = Parser { toks, pos: 0 };
    let items = parser.parse_items()?;

    let mut decls = Decls::new();
    let mut uses_builtin = false;
    for item in &items {
        match item {
            PItem::Decl(decl, span) => {
                if RESERVED.contains(&decl.name.as_str()) {
                    return Err(ParseError::new(
                        format!("'{}' is a reserved word", decl.name),
                        *span,
                    ));
                }
                if let Some(err) = decl.shape_errors() {
                    return Err(ParseError::new(err, *span));
                }
                if decls.insert(decl.name.clone(), decl.clone()).is_some() {
                    return Err(ParseError::new(
                        format!("predicate '{}' declared twice", decl.name),
                        *span,
                    ));
                }
            }
            PItem::Clause(clause) => {
                uses_builtin |= clause.head.pred == INT_BUILTIN
                    || clause.body.iter().any(|b| match b {
                        PBody::Atom(a) => a.pred == INT_BUILTIN,
                        PBody::Cmp { .. } => false,
                    });
            }
        }
    }
    if uses_builtin {
        decls.insert(INT_BUILTIN.to_string(), PredicateDecl::integer_builtin());
    }

    let mut rules = Vec::new();
    for item in &items {
        if let PItem::Clause(clause) = item {
            rules.push(lower_clause(&decls, clause)?);
        }
    }

    let program = Program { decls, rules };
    // Rule-level well-formedness (safety, head shape) is shared with
    // programmatic construction; surface the first error here.
    for diag in validate(&program) {
        if diag.severity == Severity::Error {
            return Err(ParseError::new(diag.message, diag.span.unwrap_or(Span { line: 1, col: 1 })));
        }
    }
    Ok(program)
}

/// Parses a single ground fact, e.g. a query. Facts over undeclared
/// predicates are accepted with inferred sorts (such facts are never
/// entailed, but the caller decides how to treat them).
pub fn parse_fact(text: &str, decls: &Decls) -> Result<GroundFact, ParseError> {
    let toks = Lexer::new(text).tokenize()?;
    let mut parser = Parser { toks, pos: 0 };
    let atom = parser.parse_atom()?;
    if parser.peek() == Some(&Tok::Dot) {
        parser.bump();
    }
    if let Some(t) = parser.peek() {
        return Err(ParseError::new(format!("unexpected {} after fact", t), parser.span()));
    }
    let span = atom.span;

    let effective_decls: Decls = if decls.contains_key(&atom.pred) {
        decls.clone()
    } else {
        // Infer a declaration from the argument shapes.
        let mut sorts = Vec::new();
        for arg in &atom.args {
            match arg {
                PTerm::Ident(_) => sorts.push(Sort::Object),
                _ => sorts.push(Sort::Numeric),
            }
        }
        let numeric_count = sorts.iter().filter(|s| **s == Sort::Numeric).count();
        let kind = match numeric_count {
            0 => PredicateKind::Object,
            1 if sorts.last() == Some(&Sort::Numeric) => PredicateKind::OrdinaryNumeric,
            _ => {
                return Err(ParseError::new(
                    format!("cannot infer a declaration for '{}'", atom.pred),
                    span,
                ))
            }
        };
        let mut inferred = decls.clone();
        inferred.insert(
            atom.pred.clone(),
            PredicateDecl { name: atom.pred.clone(), sorts, kind },
        );
        inferred
    };

    let mut lowerer = Lowerer::new(&effective_decls, span);
    let std_atom = lowerer.lower_atom(&atom)?;
    if !std_atom.is_ground() {
        return Err(ParseError::new("facts must be ground", span));
    }
    GroundFact::from_atom(&std_atom, &effective_decls)
        .map_err(|e| ParseError::new(e.to_string(), span))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::LimitKind;

    const SHORTEST_PATH: &str = "\
% shortest paths from v0
pred edge(obj, obj, int).
pred sp(obj, min int).

sp(v0, 0).
sp(Y, M + N) :- sp(X, M), edge(X, Y, N).
";

    #[test]
    fn parses_shortest_path() {
        let program = parse_program(SHORTEST_PATH).unwrap();
        assert_eq!(program.rules.len(), 2);
        let sp = program.decl("sp").unwrap();
        assert_eq!(sp.limit_kind(), Some(LimitKind::Min));
        assert_eq!(program.decl("edge").unwrap().kind, PredicateKind::OrdinaryNumeric);
    }

    #[test]
    fn unsafe_variable_rejected() {
        let text = "pred b(int).\npred c(max int).\nc(X) :- (X < 3).\n";
        let err = parse_program(text).unwrap_err();
        assert!(err.message.contains("does not occur in a standard body atom"), "{}", err);
    }

    #[test]
    fn ground_fact_arguments_folded() {
        let text = "pred a(int).\na(2 + 3).\n";
        let program = parse_program(text).unwrap();
        assert_eq!(program.rules[0].head.numeric_arg(), Some(&NumTerm::int(5)));
    }

    #[test]
    fn inf_is_rejected() {
        let text = "pred a(max int).\na(inf).\n";
        assert!(parse_program(text).is_err());
    }

    #[test]
    fn roundtrip_through_printer() {
        let program = parse_program(SHORTEST_PATH).unwrap();
        let printed = program.to_string();
        let reparsed = parse_program(&printed).unwrap();
        assert_eq!(program, reparsed);
    }

    #[test]
    fn parse_fact_against_decls() {
        let program = parse_program(SHORTEST_PATH).unwrap();
        let fact = parse_fact("sp(v0, 8)", &program.decls).unwrap();
        assert_eq!(
            fact,
            GroundFact::limit("sp", vec!["v0".into()], crate::ext::ExtendedInt::finite(8))
        );
        // undeclared predicates get an inferred shape
        let fresh = parse_fact("unheard_of(a, 3)", &program.decls).unwrap();
        assert_eq!(fresh.pred(), "unheard_of");
    }
}
