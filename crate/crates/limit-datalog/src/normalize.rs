//! Rule normalization.
//!
//! Evaluation assumes three properties of rules, each obtainable by a
//! logically equivalent rewrite:
//!
//! 1. numeric arguments of standard body atoms are function-free — an
//!    atom `a(T, M1 + M2)` becomes `a(T, M) ∧ @int(M1) ∧ @int(M2) ∧
//!    (M <= M1 + M2) ∧ (M1 + M2 <= M)` for a fresh `M`;
//! 2. each numeric variable occurs in at most one standard body atom —
//!    `a1(T1, M) ∧ a2(T2, M)` becomes `a1(T1, M) ∧ a2(T2, M2) ∧
//!    (M <= M2) ∧ (M2 <= M)` for a fresh `M2`;
//! 3. distinct rules use disjoint variable names.
//!
//! The `@int` atoms keep rewritten rules safe; the builtin holds of
//! every integer, so they never constrain anything.

use std::collections::BTreeSet;

use crate::ast::{
    CmpAtom, CmpOp, NumTerm, PredicateDecl, PredicateKind, Program, Rule, StdAtom, INT_BUILTIN,
};

fn fresh_name(base: &str, taken: &BTreeSet<String>) -> String {
    if !taken.contains(base) {
        return base.to_string();
    }
    let mut i = 2usize;
    loop {
        let candidate = format!("{}{}", base, i);
        if !taken.contains(&candidate) {
            return candidate;
        }
        i += 1;
    }
}

fn rename_var(rule: &mut Rule, old: &str, new: &str) {
    let subst_num = |t: &NumTerm| {
        t.substitute(&|v| (v == old).then(|| NumTerm::var(new)))
    };
    let rename_atom = |atom: &mut StdAtom| {
        for arg in &mut atom.args {
            match arg {
                crate::ast::Arg::Object(crate::ast::ObjectTerm::Var(v)) if v == old => {
                    *v = new.to_string();
                }
                crate::ast::Arg::Num(t) => *t = subst_num(t),
                _ => {}
            }
        }
    };
    rename_atom(&mut rule.head);
    for atom in &mut rule.body_std {
        rename_atom(atom);
    }
    for cmp in &mut rule.body_cmp {
        cmp.lhs = subst_num(&cmp.lhs);
        cmp.rhs = subst_num(&cmp.rhs);
    }
}

/// Pass 1: make numeric body-atom arguments function-free.
fn flatten_body_args(rule: &mut Rule, taken: &mut BTreeSet<String>, used_builtin: &mut bool) {
    let mut new_atoms = Vec::new();
    let mut new_cmps = Vec::new();
    for atom in &mut rule.body_std {
        let Some(term) = atom.numeric_arg().cloned() else { continue };
        if matches!(term, NumTerm::Var(_) | NumTerm::Int(_)) {
            continue;
        }
        let fresh = fresh_name("M", taken);
        taken.insert(fresh.clone());
        *atom.args.last_mut().expect("numeric predicates have arguments") =
            crate::ast::Arg::Num(NumTerm::var(&fresh));
        for var in term.vars() {
            *used_builtin = true;
            new_atoms.push(StdAtom::new(
                INT_BUILTIN,
                vec![crate::ast::Arg::Num(NumTerm::var(var))],
            ));
        }
        new_cmps.push(CmpAtom::new(CmpOp::Le, NumTerm::var(&fresh), term.clone()));
        new_cmps.push(CmpAtom::new(CmpOp::Le, term, NumTerm::var(&fresh)));
    }
    rule.body_std.extend(new_atoms);
    rule.body_cmp.extend(new_cmps);
}

/// Pass 2: split numeric variables shared between standard body atoms.
fn split_shared_vars(program: &Program, rule: &mut Rule, taken: &mut BTreeSet<String>) {
    let mut seen: BTreeSet<String> = BTreeSet::new();
    let mut new_cmps = Vec::new();
    for atom in &mut rule.body_std {
        if program.decl(&atom.pred).map(|d| d.kind) == Some(PredicateKind::IntegerBuiltin) {
            continue;
        }
        let Some(NumTerm::Var(v)) = atom.numeric_arg().cloned() else { continue };
        if seen.insert(v.clone()) {
            continue;
        }
        let fresh = fresh_name(&v, taken);
        taken.insert(fresh.clone());
        *atom.args.last_mut().expect("numeric predicates have arguments") =
            crate::ast::Arg::Num(NumTerm::var(&fresh));
        new_cmps.push(CmpAtom::new(CmpOp::Le, NumTerm::var(&v), NumTerm::var(&fresh)));
        new_cmps.push(CmpAtom::new(CmpOp::Le, NumTerm::var(&fresh), NumTerm::var(&v)));
    }
    rule.body_cmp.extend(new_cmps);
}

/// Normalizes a valid limit program. Entailment of facts over the
/// program's predicates is preserved; fresh names are generated
/// deterministically.
pub fn normalize(program: &Program) -> Program {
    let mut decls = program.decls.clone();
    let mut used_builtin = decls.contains_key(INT_BUILTIN);
    let mut global_names: BTreeSet<String> = BTreeSet::new();
    let mut rules = Vec::new();

    for rule in &program.rules {
        let mut rule = rule.clone();
        let mut taken = rule.vars();

        flatten_body_args(&mut rule, &mut taken, &mut used_builtin);
        split_shared_vars(program, &mut rule, &mut taken);

        // Pass 3: rename variables that appeared in an earlier rule.
        let vars = rule.vars();
        for var in &vars {
            if global_names.contains(var) {
                let mut avoid = taken.clone();
                avoid.extend(global_names.iter().cloned());
                let fresh = fresh_name(var, &avoid);
                taken.insert(fresh.clone());
                rename_var(&mut rule, var, &fresh);
            }
        }
        global_names.extend(rule.vars());
        rules.push(rule);
    }

    if used_builtin {
        decls
            .entry(INT_BUILTIN.to_string())
            .or_insert_with(PredicateDecl::integer_builtin);
    }
    Program { decls, rules }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_program;
    use crate::validate::{body_atoms_function_free, numeric_vars_unshared, validate};

    #[test]
    fn flattens_compound_body_argument() {
        let program = parse_program(
            "pred a(obj, max int).\npred b(max int).\nb(M1 + M2) :- a(t, M1 + M2).\n",
        )
        .unwrap();
        let normal = normalize(&program);
        let rule = &normal.rules[0];
        assert!(body_atoms_function_free(rule));
        // a(t, M), @int(M1), @int(M2)
        assert_eq!(rule.body_std.len(), 3);
        assert!(rule.body_std[1].pred == INT_BUILTIN && rule.body_std[2].pred == INT_BUILTIN);
        // (M <= M1 + M2), (M1 + M2 <= M)
        assert_eq!(rule.body_cmp.len(), 2);
        assert!(validate(&normal).is_empty());
    }

    #[test]
    fn splits_shared_variables() {
        let program = parse_program(
            "pred a(max int).\npred b(max int).\npred c(max int).\nc(M) :- a(M), b(M).\n",
        )
        .unwrap();
        let normal = normalize(&program);
        let rule = &normal.rules[0];
        assert!(numeric_vars_unshared(&normal, rule));
        assert_eq!(rule.body_cmp.len(), 2);
        assert!(validate(&normal).is_empty());
    }

    #[test]
    fn renames_across_rules() {
        let program = parse_program(
            "pred a(max int).\npred b(max int).\nb(M) :- a(M).\na(M + 1) :- b(M).\n",
        )
        .unwrap();
        let normal = normalize(&program);
        let vars0 = normal.rules[0].vars();
        let vars1 = normal.rules[1].vars();
        assert!(vars0.is_disjoint(&vars1));
    }

    #[test]
    fn idempotent_after_first_pass() {
        let program = parse_program(
            "pred a(obj, max int).\npred b(max int).\nb(M1 + M2) :- a(t, M1 + M2), a(t, M3).\n",
        )
        .unwrap();
        let once = normalize(&program);
        let twice = normalize(&once);
        assert_eq!(once, twice);
    }

    #[test]
    fn normal_rule_untouched() {
        let text = "pred edge(obj, obj, int).\npred sp(obj, min int).\nsp(v0, 0).\nsp(Y, M + N) :- sp(X, M), edge(X, Y, N).\n";
        let program = parse_program(text).unwrap();
        assert_eq!(normalize(&program), program);
    }
}
