//! Reduction to homogeneous programs.
//!
//! A limit program is homogeneous when it uses only one limit direction.
//! Every program reduces to an all-`max` program: each `min` predicate
//! `p` is replaced by a fresh `max` predicate with the numeric argument
//! negated, and a queried `min` fact `p(a, k)` becomes the renamed fact
//! with value `-k`. Entailment is preserved in both directions.

use std::collections::{BTreeMap, BTreeSet};

use crate::ast::{Arg, NumTerm, PredicateKind, Program, Rule};
use crate::ext::ExtendedInt;
use crate::interp::GroundFact;

fn renamed(decls: &crate::ast::Decls) -> BTreeMap<String, String> {
    let mut taken: BTreeSet<String> = decls.keys().cloned().collect();
    let mut map = BTreeMap::new();
    for (name, decl) in decls {
        if decl.kind != PredicateKind::MinLimit {
            continue;
        }
        let mut candidate = format!("{}_neg", name);
        while taken.contains(&candidate) {
            candidate.push('_');
        }
        taken.insert(candidate.clone());
        map.insert(name.clone(), candidate);
    }
    map
}

fn fresh_var(taken: &mut BTreeSet<String>) -> String {
    let mut i = 1usize;
    loop {
        let candidate = format!("N{}", i);
        if taken.insert(candidate.clone()) {
            return candidate;
        }
        i += 1;
    }
}

fn substitute_everywhere(rule: &mut Rule, old: &str, replacement: &NumTerm) {
    let subst = |t: &NumTerm| t.substitute(&|v| (v == old).then(|| replacement.clone()));
    if let Some(Arg::Num(t)) = rule.head.args.last_mut() {
        *t = subst(t);
    }
    for atom in &mut rule.body_std {
        if let Some(Arg::Num(t)) = atom.args.last_mut() {
            *t = subst(t);
        }
    }
    for cmp in &mut rule.body_cmp {
        cmp.lhs = subst(&cmp.lhs);
        cmp.rhs = subst(&cmp.rhs);
    }
}

fn rewrite_rule(rule: &Rule, map: &BTreeMap<String, String>) -> Rule {
    let mut rule = rule.clone();
    let mut taken = rule.vars();

    // Body atoms of min predicates, one at a time: a variable argument is
    // replaced by a fresh variable whose negation stands in for the old
    // one everywhere else; other arguments are negated in place.
    for i in 0..rule.body_std.len() {
        let Some(new_name) = map.get(&rule.body_std[i].pred).cloned() else { continue };
        rule.body_std[i].pred = new_name;
        let arg = rule.body_std[i]
            .args
            .last()
            .expect("numeric predicates have arguments")
            .clone();
        if let Arg::Num(term) = arg {
            match term {
                NumTerm::Var(v) => {
                    let fresh = fresh_var(&mut taken);
                    substitute_everywhere(&mut rule, &v, &NumTerm::neg(NumTerm::var(&fresh)));
                    *rule.body_std[i].args.last_mut().unwrap() = Arg::Num(NumTerm::var(&fresh));
                }
                other => {
                    *rule.body_std[i].args.last_mut().unwrap() =
                        Arg::Num(NumTerm::neg(other).fold());
                }
            }
        }
    }

    // Head of a min predicate: negate the numeric argument.
    if let Some(new_name) = map.get(&rule.head.pred) {
        rule.head.pred = new_name.clone();
        if let Some(Arg::Num(t)) = rule.head.args.last_mut() {
            *t = NumTerm::neg(t.clone()).fold();
        }
    }
    rule
}

/// Rewrites `program` into an all-`max` program and maps the queried
/// fact along, such that entailment is preserved.
pub fn homogenise(program: &Program, fact: &GroundFact) -> (Program, GroundFact) {
    let map = renamed(&program.decls);
    if map.is_empty() {
        return (program.clone(), fact.clone());
    }

    let mut decls = crate::ast::Decls::new();
    for (name, decl) in &program.decls {
        match map.get(name) {
            Some(new_name) => {
                let mut new_decl = decl.clone();
                new_decl.name = new_name.clone();
                new_decl.kind = PredicateKind::MaxLimit;
                decls.insert(new_name.clone(), new_decl);
            }
            None => {
                decls.insert(name.clone(), decl.clone());
            }
        }
    }
    let rules = program.rules.iter().map(|r| rewrite_rule(r, &map)).collect();

    let fact = match fact {
        GroundFact::Limit { pred, args, value } if map.contains_key(pred) => GroundFact::Limit {
            pred: map[pred].clone(),
            args: args.clone(),
            value: match value {
                ExtendedInt::Finite(v) => ExtendedInt::Finite(-v.clone()),
                ExtendedInt::Infinity => ExtendedInt::Infinity,
            },
        },
        other => other.clone(),
    };
    (Program { decls, rules }, fact)
}

/// True when the program uses at most one limit direction.
pub fn is_homogeneous(program: &Program) -> bool {
    let kinds: BTreeSet<_> = program
        .decls
        .values()
        .filter_map(|d| d.limit_kind())
        .collect();
    kinds.len() <= 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{parse_fact, parse_program};

    #[test]
    fn all_max_program_unchanged() {
        let program = parse_program("pred a(max int).\na(3).\n").unwrap();
        let fact = parse_fact("a(2)", &program.decls).unwrap();
        let (rewritten, fact2) = homogenise(&program, &fact);
        assert_eq!(rewritten, program);
        assert_eq!(fact2, fact);
    }

    #[test]
    fn min_fact_negated() {
        let program = parse_program(
            "pred edge(obj, obj, int).\npred sp(obj, min int).\nsp(v0, 0).\nsp(Y, M + N) :- sp(X, M), edge(X, Y, N).\n",
        )
        .unwrap();
        let fact = parse_fact("sp(v0, 7)", &program.decls).unwrap();
        let (rewritten, fact2) = homogenise(&program, &fact);
        assert!(is_homogeneous(&rewritten));
        assert_eq!(
            fact2,
            GroundFact::limit("sp_neg", vec!["v0".into()], ExtendedInt::finite(-7))
        );
        assert_eq!(rewritten.decl("sp_neg").unwrap().kind, PredicateKind::MaxLimit);
        assert!(rewritten.decl("sp").is_none());
        // the recursive rule now negates through a fresh variable
        let rule = &rewritten.rules[1];
        assert_eq!(rule.head.pred, "sp_neg");
        assert!(crate::validate::validate(&rewritten).is_empty());
    }
}
