//! Well-formedness checks for limit programs.
//!
//! A program passes validation when every predicate is declared with a
//! legal shape, atoms match their declarations, every rule is safe
//! (each variable occurs in a standard body atom; body-empty rules are
//! ground facts), and rules with a nonempty body have an object or limit
//! head.

use std::fmt;

use crate::ast::{Arg, NumTerm, ObjectTerm, PredicateKind, Program, Rule, Sort, Span, StdAtom};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub message: String,
    pub span: Option<Span>,
}

impl Diagnostic {
    pub fn error(message: impl Into<String>, span: Option<Span>) -> Self {
        Diagnostic { severity: Severity::Error, message: message.into(), span }
    }

    pub fn warning(message: impl Into<String>, span: Option<Span>) -> Self {
        Diagnostic { severity: Severity::Warning, message: message.into(), span }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        match self.span {
            Some(span) => write!(f, "{}: {}: {}", span, tag, self.message),
            None => write!(f, "{}: {}", tag, self.message),
        }
    }
}

pub fn has_errors(diags: &[Diagnostic]) -> bool {
    diags.iter().any(|d| d.severity == Severity::Error)
}

fn check_atom(program: &Program, atom: &StdAtom, span: Option<Span>, out: &mut Vec<Diagnostic>) {
    let Some(decl) = program.decl(&atom.pred) else {
        out.push(Diagnostic::error(format!("undeclared predicate '{}'", atom.pred), span));
        return;
    };
    if decl.arity() != atom.args.len() {
        out.push(Diagnostic::error(
            format!(
                "'{}' expects {} arguments, got {}",
                atom.pred,
                decl.arity(),
                atom.args.len()
            ),
            span,
        ));
        return;
    }
    for (arg, sort) in atom.args.iter().zip(decl.sorts.iter()) {
        let ok = matches!(
            (arg, sort),
            (Arg::Object(_), Sort::Object) | (Arg::Num(_), Sort::Numeric)
        );
        if !ok {
            out.push(Diagnostic::error(
                format!("argument '{}' of '{}' has the wrong sort", arg, atom.pred),
                span,
            ));
        }
    }
}

fn check_rule(program: &Program, rule: &Rule, out: &mut Vec<Diagnostic>) {
    let span = rule.span;
    check_atom(program, &rule.head, span, out);
    for atom in &rule.body_std {
        check_atom(program, atom, span, out);
    }

    // Safety: every variable occurs in some standard body atom.
    let mut body_vars = std::collections::BTreeSet::new();
    for atom in &rule.body_std {
        atom.collect_vars(&mut body_vars);
    }
    for var in rule.vars() {
        if !body_vars.contains(&var) {
            out.push(Diagnostic::error(
                format!("variable '{}' does not occur in a standard body atom", var),
                span,
            ));
        }
    }

    if rule.is_fact() {
        if !rule.head.is_ground() {
            out.push(Diagnostic::error("a fact must be ground", span));
        }
    } else if let Some(decl) = program.decl(&rule.head.pred) {
        match decl.kind {
            PredicateKind::Object | PredicateKind::MinLimit | PredicateKind::MaxLimit => {}
            PredicateKind::OrdinaryNumeric => out.push(Diagnostic::error(
                format!(
                    "ordinary numeric predicate '{}' cannot head a rule with a nonempty body",
                    rule.head.pred
                ),
                span,
            )),
            PredicateKind::IntegerBuiltin => out.push(Diagnostic::error(
                format!("builtin predicate '{}' cannot be derived", rule.head.pred),
                span,
            )),
        }
    }
    if rule.is_fact() && program.decl(&rule.head.pred).map(|d| d.kind) == Some(PredicateKind::IntegerBuiltin)
    {
        out.push(Diagnostic::error(
            format!("builtin predicate '{}' cannot be asserted", rule.head.pred),
            span,
        ));
    }
}

/// Checks that `program` is a well-formed limit program. An empty result
/// means the program is accepted.
pub fn validate(program: &Program) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    for (name, decl) in &program.decls {
        if name != &decl.name {
            out.push(Diagnostic::error(
                format!("declaration table key '{}' does not match name '{}'", name, decl.name),
                None,
            ));
        }
        if let Some(err) = decl.shape_errors() {
            out.push(Diagnostic::error(err, None));
        }
    }
    for rule in &program.rules {
        check_rule(program, rule, &mut out);
    }
    out
}

/// True when the rule's numeric body atom arguments are all plain
/// variables or integers (normal form used by the evaluation pipeline).
pub fn body_atoms_function_free(rule: &Rule) -> bool {
    rule.body_std.iter().all(|atom| {
        atom.numeric_arg()
            .map(|t| matches!(t, NumTerm::Var(_) | NumTerm::Int(_)))
            .unwrap_or(true)
    })
}

/// True when no numeric variable occurs in two standard body atoms
/// (ignoring the virtual integer builtin).
pub fn numeric_vars_unshared(program: &Program, rule: &Rule) -> bool {
    let mut seen = std::collections::BTreeSet::new();
    for atom in &rule.body_std {
        if program.decl(&atom.pred).map(|d| d.kind) == Some(PredicateKind::IntegerBuiltin) {
            continue;
        }
        if let Some(t) = atom.numeric_arg() {
            for var in t.vars() {
                if !seen.insert(var) {
                    return false;
                }
            }
        }
    }
    true
}

/// Object variables of a rule (those in object positions).
pub fn object_vars(rule: &Rule) -> std::collections::BTreeSet<String> {
    let mut out = std::collections::BTreeSet::new();
    for atom in std::iter::once(&rule.head).chain(rule.body_std.iter()) {
        for obj in atom.object_args() {
            if let ObjectTerm::Var(v) = obj {
                out.insert(v.clone());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_program;

    #[test]
    fn accepts_shortest_path() {
        let program = parse_program(
            "pred edge(obj, obj, int).\npred sp(obj, min int).\nsp(v0, 0).\nsp(Y, M + N) :- sp(X, M), edge(X, Y, N).\n",
        )
        .unwrap();
        assert!(validate(&program).is_empty());
    }

    #[test]
    fn ordinary_idb_head_rejected() {
        use crate::ast::*;
        let mut decls = Decls::new();
        decls.insert(
            "a".into(),
            PredicateDecl::new("a", vec![Sort::Numeric], PredicateKind::OrdinaryNumeric).unwrap(),
        );
        decls.insert(
            "b".into(),
            PredicateDecl::new("b", vec![Sort::Numeric], PredicateKind::MaxLimit).unwrap(),
        );
        let rule = Rule::new(
            StdAtom::new("a", vec![Arg::num(NumTerm::var("M"))]),
            vec![StdAtom::new("b", vec![Arg::num(NumTerm::var("M"))])],
            vec![],
        );
        let program = Program::new(decls, vec![rule]);
        let diags = validate(&program);
        assert!(diags.iter().any(|d| d.message.contains("cannot head a rule")));
    }

    #[test]
    fn numeric_position_must_be_last() {
        use crate::ast::*;
        let mut decls = Decls::new();
        decls.insert(
            "p".into(),
            PredicateDecl {
                name: "p".into(),
                sorts: vec![Sort::Numeric, Sort::Object],
                kind: PredicateKind::OrdinaryNumeric,
            },
        );
        let program = Program::new(decls, vec![]);
        let diags = validate(&program);
        assert!(diags.iter().any(|d| d.message.contains("last position numeric")));
    }
}
