//! Pseudo-interpretations and the `⊑` order.
//!
//! A limit-closed interpretation may contain infinitely many facts, but
//! per limit predicate and object tuple only the best bound matters. A
//! pseudo-interpretation stores that bound: object and ordinary numeric
//! facts explicitly, and one value in `ℤ ∪ {∞}` per (limit predicate,
//! object tuple) key, where `∞` means the tuple holds for every integer.
//!
//! `J ⊑ J'` holds when the limit-closed interpretation represented by `J`
//! is contained in the one represented by `J'`: sets are compared by
//! inclusion, and limit values by domination in the predicate's
//! direction (larger for `max`, smaller for `min`, `∞` above everything).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::BigInt;
use thiserror::Error;

use crate::ast::{Arg, Decls, LimitKind, ObjectTerm, PredicateKind, StdAtom};
use crate::ext::ExtendedInt;

/// Identifies a limit value slot: predicate name plus object tuple.
pub type LimitKey = (String, Vec<String>);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InputError {
    #[error("unknown predicate '{0}'")]
    UnknownPredicate(String),
    #[error("sort mismatch for '{pred}': {detail}")]
    SortMismatch { pred: String, detail: String },
    #[error("not a ground fact: {0}")]
    NotGround(String),
}

/// A ground fact over evaluated arguments.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroundFact {
    Object { pred: String, args: Vec<String> },
    Ordinary { pred: String, args: Vec<String>, value: BigInt },
    Limit { pred: String, args: Vec<String>, value: ExtendedInt },
}

impl GroundFact {
    pub fn object(pred: impl Into<String>, args: Vec<String>) -> Self {
        GroundFact::Object { pred: pred.into(), args }
    }

    pub fn ordinary(pred: impl Into<String>, args: Vec<String>, value: impl Into<BigInt>) -> Self {
        GroundFact::Ordinary { pred: pred.into(), args, value: value.into() }
    }

    pub fn limit(pred: impl Into<String>, args: Vec<String>, value: impl Into<ExtendedInt>) -> Self {
        GroundFact::Limit { pred: pred.into(), args, value: value.into() }
    }

    pub fn pred(&self) -> &str {
        match self {
            GroundFact::Object { pred, .. }
            | GroundFact::Ordinary { pred, .. }
            | GroundFact::Limit { pred, .. } => pred,
        }
    }

    pub fn object_args(&self) -> &[String] {
        match self {
            GroundFact::Object { args, .. }
            | GroundFact::Ordinary { args, .. }
            | GroundFact::Limit { args, .. } => args,
        }
    }

    /// Converts a ground standard atom into a fact, checking sorts against
    /// the declarations and evaluating the numeric argument.
    pub fn from_atom(atom: &StdAtom, decls: &Decls) -> Result<GroundFact, InputError> {
        let decl = decls
            .get(&atom.pred)
            .ok_or_else(|| InputError::UnknownPredicate(atom.pred.clone()))?;
        if decl.arity() != atom.args.len() {
            return Err(InputError::SortMismatch {
                pred: atom.pred.clone(),
                detail: format!("expected {} arguments, got {}", decl.arity(), atom.args.len()),
            });
        }
        let mut objects = Vec::new();
        let mut value: Option<BigInt> = None;
        for (arg, sort) in atom.args.iter().zip(decl.sorts.iter()) {
            match (arg, sort) {
                (Arg::Object(ObjectTerm::Const(c)), crate::ast::Sort::Object) => {
                    objects.push(c.clone());
                }
                (Arg::Object(ObjectTerm::Var(_)), _) => {
                    return Err(InputError::NotGround(atom.to_string()));
                }
                (Arg::Num(t), crate::ast::Sort::Numeric) => match t.eval() {
                    Some(v) => value = Some(v),
                    None => return Err(InputError::NotGround(atom.to_string())),
                },
                _ => {
                    return Err(InputError::SortMismatch {
                        pred: atom.pred.clone(),
                        detail: format!("argument '{}' has the wrong sort", arg),
                    });
                }
            }
        }
        Ok(match decl.kind {
            PredicateKind::Object => GroundFact::Object { pred: atom.pred.clone(), args: objects },
            PredicateKind::OrdinaryNumeric | PredicateKind::IntegerBuiltin => GroundFact::Ordinary {
                pred: atom.pred.clone(),
                args: objects,
                value: value.expect("numeric predicate has a numeric argument"),
            },
            PredicateKind::MinLimit | PredicateKind::MaxLimit => GroundFact::Limit {
                pred: atom.pred.clone(),
                args: objects,
                value: ExtendedInt::Finite(value.expect("numeric predicate has a numeric argument")),
            },
        })
    }
}

impl fmt::Display for GroundFact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (pred, args) = (self.pred(), self.object_args());
        write!(f, "{}", pred)?;
        let value: Option<String> = match self {
            GroundFact::Object { .. } => None,
            GroundFact::Ordinary { value, .. } => Some(value.to_string()),
            GroundFact::Limit { value, .. } => Some(value.to_string()),
        };
        if args.is_empty() && value.is_none() {
            return Ok(());
        }
        write!(f, "(")?;
        let mut first = true;
        for a in args {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{}", a)?;
        }
        if let Some(v) = value {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{}", v)?;
        }
        write!(f, ")")
    }
}

/// `lower ⊑ upper` on a single limit value slot.
pub fn dominates(kind: LimitKind, lower: &ExtendedInt, upper: &ExtendedInt) -> bool {
    match (lower, upper) {
        (_, ExtendedInt::Infinity) => true,
        (ExtendedInt::Infinity, ExtendedInt::Finite(_)) => false,
        (ExtendedInt::Finite(a), ExtendedInt::Finite(b)) => match kind {
            LimitKind::Max => a <= b,
            LimitKind::Min => b <= a,
        },
    }
}

/// Least upper bound of two limit values in the predicate's direction.
pub fn join_values(kind: LimitKind, a: &ExtendedInt, b: &ExtendedInt) -> ExtendedInt {
    match (a, b) {
        (ExtendedInt::Infinity, _) | (_, ExtendedInt::Infinity) => ExtendedInt::Infinity,
        (ExtendedInt::Finite(x), ExtendedInt::Finite(y)) => match kind {
            LimitKind::Max => ExtendedInt::Finite(x.max(y).clone()),
            LimitKind::Min => ExtendedInt::Finite(x.min(y).clone()),
        },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PseudoInterpretation {
    object_facts: BTreeSet<(String, Vec<String>)>,
    ordinary_facts: BTreeSet<(String, Vec<String>, BigInt)>,
    limit_values: BTreeMap<LimitKey, ExtendedInt>,
}

impl PseudoInterpretation {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn singleton(fact: &GroundFact) -> Self {
        let mut j = Self::empty();
        j.insert_fact(fact, None);
        j
    }

    pub fn is_empty(&self) -> bool {
        self.object_facts.is_empty()
            && self.ordinary_facts.is_empty()
            && self.limit_values.is_empty()
    }

    /// Number of facts in the finite representation.
    pub fn fact_count(&self) -> usize {
        self.object_facts.len() + self.ordinary_facts.len() + self.limit_values.len()
    }

    pub fn limit_values(&self) -> &BTreeMap<LimitKey, ExtendedInt> {
        &self.limit_values
    }

    pub fn limit_value(&self, key: &LimitKey) -> Option<&ExtendedInt> {
        self.limit_values.get(key)
    }

    pub fn has_object_fact(&self, pred: &str, args: &[String]) -> bool {
        self.object_facts.contains(&(pred.to_string(), args.to_vec()))
    }

    pub fn has_ordinary_fact(&self, pred: &str, args: &[String], value: &BigInt) -> bool {
        self.ordinary_facts
            .contains(&(pred.to_string(), args.to_vec(), value.clone()))
    }

    /// Forces a limit slot to `∞`, if present.
    pub fn promote_to_infinity(&mut self, key: &LimitKey) {
        if let Some(v) = self.limit_values.get_mut(key) {
            *v = ExtendedInt::Infinity;
        }
    }

    /// Inserts a fact, merging limit values in the predicate's direction.
    /// The limit kind is taken from `kind` when given, otherwise `Max`;
    /// callers resolving kinds from declarations should pass it.
    pub fn insert_fact(&mut self, fact: &GroundFact, kind: Option<LimitKind>) {
        match fact {
            GroundFact::Object { pred, args } => {
                self.object_facts.insert((pred.clone(), args.clone()));
            }
            GroundFact::Ordinary { pred, args, value } => {
                self.ordinary_facts.insert((pred.clone(), args.clone(), value.clone()));
            }
            GroundFact::Limit { pred, args, value } => {
                let kind = kind.unwrap_or(LimitKind::Max);
                let key = (pred.clone(), args.clone());
                match self.limit_values.get_mut(&key) {
                    Some(existing) => *existing = join_values(kind, existing, value),
                    None => {
                        self.limit_values.insert(key, value.clone());
                    }
                }
            }
        }
    }

    /// The `⊑`-least pseudo-interpretation above `self` satisfying `fact`.
    pub fn join_fact(mut self, fact: &GroundFact, decls: &Decls) -> Self {
        let kind = decls.get(fact.pred()).and_then(|d| d.limit_kind());
        self.insert_fact(fact, kind);
        self
    }

    /// Whether the limit-closed interpretation represented by `self`
    /// contains `fact`.
    pub fn satisfies(&self, fact: &GroundFact, decls: &Decls) -> Result<bool, InputError> {
        let decl = decls
            .get(fact.pred())
            .ok_or_else(|| InputError::UnknownPredicate(fact.pred().to_string()))?;
        match fact {
            GroundFact::Object { pred, args } => {
                if decl.kind != PredicateKind::Object {
                    return Err(InputError::SortMismatch {
                        pred: pred.clone(),
                        detail: "predicate is numeric".into(),
                    });
                }
                Ok(self.has_object_fact(pred, args))
            }
            GroundFact::Ordinary { pred, args, value } => match decl.kind {
                PredicateKind::OrdinaryNumeric => Ok(self.has_ordinary_fact(pred, args, value)),
                PredicateKind::IntegerBuiltin => Ok(true),
                _ => Err(InputError::SortMismatch {
                    pred: pred.clone(),
                    detail: "predicate is not ordinary numeric".into(),
                }),
            },
            GroundFact::Limit { pred, args, value } => {
                let kind = decl.limit_kind().ok_or_else(|| InputError::SortMismatch {
                    pred: pred.clone(),
                    detail: "predicate is not a limit predicate".into(),
                })?;
                match self.limit_values.get(&(pred.clone(), args.clone())) {
                    None => Ok(false),
                    Some(entry) => Ok(dominates(kind, value, entry)),
                }
            }
        }
    }

    /// The `⊑` order: containment of the represented limit-closed
    /// interpretations.
    pub fn preceq(&self, other: &PseudoInterpretation, decls: &Decls) -> bool {
        if !self.object_facts.is_subset(&other.object_facts) {
            return false;
        }
        if !self.ordinary_facts.is_subset(&other.ordinary_facts) {
            return false;
        }
        self.limit_values.iter().all(|(key, value)| {
            let Some(kind) = decls.get(&key.0).and_then(|d| d.limit_kind()) else {
                return false;
            };
            match other.limit_values.get(key) {
                Some(upper) => dominates(kind, value, upper),
                None => false,
            }
        })
    }

    /// All facts in a canonical order.
    pub fn all_facts(&self) -> Vec<GroundFact> {
        let mut out = Vec::with_capacity(self.fact_count());
        for (pred, args) in &self.object_facts {
            out.push(GroundFact::Object { pred: pred.clone(), args: args.clone() });
        }
        for (pred, args, value) in &self.ordinary_facts {
            out.push(GroundFact::Ordinary {
                pred: pred.clone(),
                args: args.clone(),
                value: value.clone(),
            });
        }
        for ((pred, args), value) in &self.limit_values {
            out.push(GroundFact::Limit {
                pred: pred.clone(),
                args: args.clone(),
                value: value.clone(),
            });
        }
        out.sort();
        out
    }
}

impl fmt::Display for PseudoInterpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, fact) in self.all_facts().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", fact)?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::{PredicateDecl, Sort};

    fn decls() -> Decls {
        let mut d = Decls::new();
        d.insert(
            "a".into(),
            PredicateDecl::new("a", vec![Sort::Numeric], PredicateKind::OrdinaryNumeric).unwrap(),
        );
        d.insert(
            "bmax".into(),
            PredicateDecl::new("bmax", vec![Sort::Object, Sort::Numeric], PredicateKind::MaxLimit)
                .unwrap(),
        );
        d.insert(
            "bmin".into(),
            PredicateDecl::new("bmin", vec![Sort::Object, Sort::Numeric], PredicateKind::MinLimit)
                .unwrap(),
        );
        d
    }

    #[test]
    fn satisfies_max_fact() {
        let d = decls();
        let mut j = PseudoInterpretation::empty();
        j.insert_fact(&GroundFact::ordinary("a", vec![], 1), None);
        j.insert_fact(&GroundFact::ordinary("a", vec![], 2), None);
        j.insert_fact(&GroundFact::limit("bmax", vec!["a".into()], ExtendedInt::finite(5)), Some(LimitKind::Max));
        j.insert_fact(
            &GroundFact::limit("bmax", vec!["b".into()], ExtendedInt::Infinity),
            Some(LimitKind::Max),
        );

        let f3 = GroundFact::limit("bmax", vec!["a".into()], ExtendedInt::finite(3));
        let f6 = GroundFact::limit("bmax", vec!["a".into()], ExtendedInt::finite(6));
        assert!(j.satisfies(&f3, &d).unwrap());
        assert!(!j.satisfies(&f6, &d).unwrap());

        // ∞ dominates every integer.
        let big = GroundFact::limit(
            "bmax",
            vec!["b".into()],
            ExtendedInt::Finite(num::BigInt::from(10u64).pow(9)),
        );
        assert!(j.satisfies(&big, &d).unwrap());

        // the empty interpretation satisfies nothing
        let empty = PseudoInterpretation::empty();
        assert!(!empty.satisfies(&f3, &d).unwrap());
    }

    #[test]
    fn preceq_orders_limit_values() {
        let d = decls();
        let lo = PseudoInterpretation::singleton(&GroundFact::limit(
            "bmax",
            vec!["a".into()],
            ExtendedInt::finite(3),
        ));
        let hi = PseudoInterpretation::singleton(&GroundFact::limit(
            "bmax",
            vec!["a".into()],
            ExtendedInt::finite(5),
        ));
        assert!(lo.preceq(&hi, &d));
        assert!(!hi.preceq(&lo, &d));
        assert!(PseudoInterpretation::empty().preceq(&hi, &d));

        // min reverses the order
        let lo_min = PseudoInterpretation::singleton(&GroundFact::limit(
            "bmin",
            vec!["a".into()],
            ExtendedInt::finite(5),
        ));
        let hi_min = PseudoInterpretation::singleton(&GroundFact::limit(
            "bmin",
            vec!["a".into()],
            ExtendedInt::finite(3),
        ));
        assert!(lo_min.preceq(&hi_min, &d));
        assert!(!hi_min.preceq(&lo_min, &d));
    }

    #[test]
    fn join_keeps_best_bound() {
        let d = decls();
        let j = PseudoInterpretation::singleton(&GroundFact::limit(
            "bmax",
            vec!["a".into()],
            ExtendedInt::finite(3),
        ));
        let joined = j
            .clone()
            .join_fact(&GroundFact::limit("bmax", vec!["a".into()], ExtendedInt::finite(5)), &d);
        assert_eq!(
            joined.limit_value(&("bmax".into(), vec!["a".into()])),
            Some(&ExtendedInt::finite(5))
        );
        let unchanged = j
            .clone()
            .join_fact(&GroundFact::limit("bmax", vec!["a".into()], ExtendedInt::finite(2)), &d);
        assert_eq!(unchanged, j);

        let from_empty = PseudoInterpretation::empty()
            .join_fact(&GroundFact::ordinary("a", vec![], 1), &d);
        assert!(from_empty.has_ordinary_fact("a", &[], &num::BigInt::from(1)));
    }
}
