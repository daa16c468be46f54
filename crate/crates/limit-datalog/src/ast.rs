//! Abstract syntax for limit Datalog programs.
//!
//! A vocabulary declares predicates over object and numeric positions. An
//! object predicate has no numeric positions; a numeric predicate has
//! exactly one, in the last position, and is either an ordinary numeric
//! predicate or a limit predicate keeping minimal (`min`) or maximal
//! (`max`) bounds. Rules are conjunctions of standard and comparison
//! atoms implying a standard head atom; every variable of a rule must
//! occur in some standard body atom (safety), and a rule with a nonempty
//! body must have an object or limit head.
//!
//! The distinguished predicate [`INT_BUILTIN`] is a virtual unary numeric
//! predicate that holds of every integer. It is introduced by
//! normalization to keep rewritten rules safe and is satisfied by
//! construction, so it never contributes constraints during evaluation.

use std::collections::BTreeSet;
use std::fmt;

use num::BigInt;

/// Name of the virtual all-integers predicate.
pub const INT_BUILTIN: &str = "@int";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sort {
    Object,
    Numeric,
}

/// Direction of a limit predicate: which bound is informative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LimitKind {
    Min,
    Max,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PredicateKind {
    Object,
    OrdinaryNumeric,
    MinLimit,
    MaxLimit,
    /// Virtual predicate satisfied by every integer; see [`INT_BUILTIN`].
    IntegerBuiltin,
}

impl PredicateKind {
    pub fn is_limit(self) -> bool {
        matches!(self, PredicateKind::MinLimit | PredicateKind::MaxLimit)
    }

    /// Atoms of these kinds bind their numeric variables during
    /// semi-grounding: such variables are kept symbolic.
    pub fn binds_limit_variables(self) -> bool {
        matches!(
            self,
            PredicateKind::MinLimit | PredicateKind::MaxLimit | PredicateKind::IntegerBuiltin
        )
    }

    pub fn limit_kind(self) -> Option<LimitKind> {
        match self {
            PredicateKind::MinLimit => Some(LimitKind::Min),
            PredicateKind::MaxLimit => Some(LimitKind::Max),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PredicateDecl {
    pub name: String,
    pub sorts: Vec<Sort>,
    pub kind: PredicateKind,
}

impl PredicateDecl {
    /// Builds a declaration, rejecting shapes outside the limit fragment:
    /// object predicates must be numeric-free, numeric predicates must
    /// have exactly the last position numeric.
    pub fn new(name: impl Into<String>, sorts: Vec<Sort>, kind: PredicateKind) -> Result<Self, String> {
        let decl = PredicateDecl { name: name.into(), sorts, kind };
        decl.shape_errors().map_or(Ok(decl), Err)
    }

    /// The declaration of the virtual all-integers predicate.
    pub fn integer_builtin() -> Self {
        PredicateDecl {
            name: INT_BUILTIN.to_string(),
            sorts: vec![Sort::Numeric],
            kind: PredicateKind::IntegerBuiltin,
        }
    }

    pub fn arity(&self) -> usize {
        self.sorts.len()
    }

    pub fn limit_kind(&self) -> Option<LimitKind> {
        self.kind.limit_kind()
    }

    /// Checks the predicate-shape invariant, returning a description of
    /// the violation if any.
    pub fn shape_errors(&self) -> Option<String> {
        let numeric_positions: Vec<usize> = self
            .sorts
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Sort::Numeric)
            .map(|(i, _)| i)
            .collect();
        match self.kind {
            PredicateKind::Object => {
                if !numeric_positions.is_empty() {
                    return Some(format!(
                        "object predicate '{}' has a numeric position",
                        self.name
                    ));
                }
            }
            PredicateKind::OrdinaryNumeric | PredicateKind::MinLimit | PredicateKind::MaxLimit => {
                if numeric_positions != [self.sorts.len().wrapping_sub(1)] || self.sorts.is_empty() {
                    return Some(format!(
                        "numeric predicate '{}' must have exactly the last position numeric",
                        self.name
                    ));
                }
            }
            PredicateKind::IntegerBuiltin => {
                if self.sorts != [Sort::Numeric] {
                    return Some(format!(
                        "builtin predicate '{}' must be unary numeric",
                        self.name
                    ));
                }
            }
        }
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ObjectTerm {
    Const(String),
    Var(String),
}

impl ObjectTerm {
    pub fn var_name(&self) -> Option<&str> {
        match self {
            ObjectTerm::Var(v) => Some(v),
            ObjectTerm::Const(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NumTerm {
    Int(BigInt),
    Var(String),
    Add(Box<NumTerm>, Box<NumTerm>),
    Sub(Box<NumTerm>, Box<NumTerm>),
    Mul(Box<NumTerm>, Box<NumTerm>),
}

impl NumTerm {
    pub fn int(value: impl Into<BigInt>) -> Self {
        NumTerm::Int(value.into())
    }

    pub fn var(name: impl Into<String>) -> Self {
        NumTerm::Var(name.into())
    }

    pub fn add(lhs: NumTerm, rhs: NumTerm) -> Self {
        NumTerm::Add(Box::new(lhs), Box::new(rhs))
    }

    pub fn sub(lhs: NumTerm, rhs: NumTerm) -> Self {
        NumTerm::Sub(Box::new(lhs), Box::new(rhs))
    }

    pub fn mul(lhs: NumTerm, rhs: NumTerm) -> Self {
        NumTerm::Mul(Box::new(lhs), Box::new(rhs))
    }

    /// Negation, represented as subtraction from zero.
    pub fn neg(term: NumTerm) -> Self {
        match term {
            NumTerm::Int(v) => NumTerm::Int(-v),
            other => NumTerm::sub(NumTerm::int(0), other),
        }
    }

    pub fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            NumTerm::Int(_) => {}
            NumTerm::Var(v) => {
                out.insert(v.clone());
            }
            NumTerm::Add(a, b) | NumTerm::Sub(a, b) | NumTerm::Mul(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    pub fn is_ground(&self) -> bool {
        match self {
            NumTerm::Int(_) => true,
            NumTerm::Var(_) => false,
            NumTerm::Add(a, b) | NumTerm::Sub(a, b) | NumTerm::Mul(a, b) => {
                a.is_ground() && b.is_ground()
            }
        }
    }

    /// Evaluates a ground term; `None` if a variable is present.
    pub fn eval(&self) -> Option<BigInt> {
        match self {
            NumTerm::Int(v) => Some(v.clone()),
            NumTerm::Var(_) => None,
            NumTerm::Add(a, b) => Some(a.eval()? + b.eval()?),
            NumTerm::Sub(a, b) => Some(a.eval()? - b.eval()?),
            NumTerm::Mul(a, b) => Some(a.eval()? * b.eval()?),
        }
    }

    /// Folds every ground subterm into an integer literal.
    pub fn fold(&self) -> NumTerm {
        match self {
            NumTerm::Int(_) | NumTerm::Var(_) => self.clone(),
            NumTerm::Add(a, b) | NumTerm::Sub(a, b) | NumTerm::Mul(a, b) => {
                let fa = a.fold();
                let fb = b.fold();
                if let (NumTerm::Int(x), NumTerm::Int(y)) = (&fa, &fb) {
                    return NumTerm::Int(match self {
                        NumTerm::Add(..) => x + y,
                        NumTerm::Sub(..) => x - y,
                        _ => x * y,
                    });
                }
                match self {
                    NumTerm::Add(..) => NumTerm::add(fa, fb),
                    NumTerm::Sub(..) => NumTerm::sub(fa, fb),
                    _ => NumTerm::mul(fa, fb),
                }
            }
        }
    }

    /// Replaces variables by terms according to `subst`, folding ground
    /// results.
    pub fn substitute(&self, subst: &dyn Fn(&str) -> Option<NumTerm>) -> NumTerm {
        let replaced = match self {
            NumTerm::Int(v) => NumTerm::Int(v.clone()),
            NumTerm::Var(v) => subst(v).unwrap_or_else(|| NumTerm::Var(v.clone())),
            NumTerm::Add(a, b) => NumTerm::add(a.substitute(subst), b.substitute(subst)),
            NumTerm::Sub(a, b) => NumTerm::sub(a.substitute(subst), b.substitute(subst)),
            NumTerm::Mul(a, b) => NumTerm::mul(a.substitute(subst), b.substitute(subst)),
        };
        replaced.fold()
    }

    /// Collects the integer literals occurring in the term.
    pub fn collect_ints(&self, out: &mut BTreeSet<BigInt>) {
        match self {
            NumTerm::Int(v) => {
                out.insert(v.clone());
            }
            NumTerm::Var(_) => {}
            NumTerm::Add(a, b) | NumTerm::Sub(a, b) | NumTerm::Mul(a, b) => {
                a.collect_ints(out);
                b.collect_ints(out);
            }
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, prec: u8) -> fmt::Result {
        // Precedence: additive 1, multiplicative 2, atoms 3.
        match self {
            NumTerm::Int(v) => write!(f, "{}", v),
            NumTerm::Var(v) => write!(f, "{}", v),
            NumTerm::Sub(a, b) if **a == NumTerm::Int(BigInt::from(0)) => {
                // unary minus sugar
                write!(f, "-")?;
                b.fmt_prec(f, 3)
            }
            NumTerm::Add(a, b) | NumTerm::Sub(a, b) => {
                let open = prec > 1;
                if open {
                    write!(f, "(")?;
                }
                a.fmt_prec(f, 1)?;
                write!(f, " {} ", if matches!(self, NumTerm::Add(..)) { "+" } else { "-" })?;
                b.fmt_prec(f, 2)?;
                if open {
                    write!(f, ")")?;
                }
                Ok(())
            }
            NumTerm::Mul(a, b) => {
                let open = prec > 2;
                if open {
                    write!(f, "(")?;
                }
                a.fmt_prec(f, 2)?;
                write!(f, " * ")?;
                b.fmt_prec(f, 3)?;
                if open {
                    write!(f, ")")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for NumTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Arg {
    Object(ObjectTerm),
    Num(NumTerm),
}

impl Arg {
    pub fn obj_const(name: impl Into<String>) -> Self {
        Arg::Object(ObjectTerm::Const(name.into()))
    }

    pub fn obj_var(name: impl Into<String>) -> Self {
        Arg::Object(ObjectTerm::Var(name.into()))
    }

    pub fn num(term: NumTerm) -> Self {
        Arg::Num(term)
    }
}

impl fmt::Display for Arg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arg::Object(ObjectTerm::Const(c)) => write!(f, "{}", c),
            Arg::Object(ObjectTerm::Var(v)) => write!(f, "{}", v),
            Arg::Num(t) => write!(f, "{}", t),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StdAtom {
    pub pred: String,
    pub args: Vec<Arg>,
}

impl StdAtom {
    pub fn new(pred: impl Into<String>, args: Vec<Arg>) -> Self {
        StdAtom { pred: pred.into(), args }
    }

    pub fn is_ground(&self) -> bool {
        self.args.iter().all(|a| match a {
            Arg::Object(ObjectTerm::Var(_)) => false,
            Arg::Object(ObjectTerm::Const(_)) => true,
            Arg::Num(t) => t.is_ground(),
        })
    }

    /// The numeric term in the final position, if any.
    pub fn numeric_arg(&self) -> Option<&NumTerm> {
        match self.args.last() {
            Some(Arg::Num(t)) => Some(t),
            _ => None,
        }
    }

    pub fn object_args(&self) -> impl Iterator<Item = &ObjectTerm> {
        self.args.iter().filter_map(|a| match a {
            Arg::Object(o) => Some(o),
            Arg::Num(_) => None,
        })
    }

    pub fn collect_vars(&self, out: &mut BTreeSet<String>) {
        for arg in &self.args {
            match arg {
                Arg::Object(ObjectTerm::Var(v)) => {
                    out.insert(v.clone());
                }
                Arg::Object(ObjectTerm::Const(_)) => {}
                Arg::Num(t) => t.collect_vars(out),
            }
        }
    }
}

impl fmt::Display for StdAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.args.is_empty() {
            return write!(f, "{}", self.pred);
        }
        write!(f, "{}(", self.pred)?;
        for (i, arg) in self.args.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", arg)?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CmpOp {
    Lt,
    Le,
}

impl fmt::Display for CmpOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if *self == CmpOp::Lt { "<" } else { "<=" })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CmpAtom {
    pub op: CmpOp,
    pub lhs: NumTerm,
    pub rhs: NumTerm,
}

impl CmpAtom {
    pub fn new(op: CmpOp, lhs: NumTerm, rhs: NumTerm) -> Self {
        CmpAtom { op, lhs, rhs }
    }
}

impl fmt::Display for CmpAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {} {})", self.lhs, self.op, self.rhs)
    }
}

/// Source position of a parsed construct (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub head: StdAtom,
    pub body_std: Vec<StdAtom>,
    pub body_cmp: Vec<CmpAtom>,
    pub span: Option<Span>,
}

impl Rule {
    pub fn new(head: StdAtom, body_std: Vec<StdAtom>, body_cmp: Vec<CmpAtom>) -> Self {
        Rule { head, body_std, body_cmp, span: None }
    }

    pub fn fact(head: StdAtom) -> Self {
        Rule::new(head, Vec::new(), Vec::new())
    }

    pub fn is_fact(&self) -> bool {
        self.body_std.is_empty() && self.body_cmp.is_empty()
    }

    /// All variables occurring anywhere in the rule.
    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.head.collect_vars(&mut out);
        for atom in &self.body_std {
            atom.collect_vars(&mut out);
        }
        for cmp in &self.body_cmp {
            cmp.lhs.collect_vars(&mut out);
            cmp.rhs.collect_vars(&mut out);
        }
        out
    }

    /// Variables occurring in the numeric argument of a limit (or
    /// builtin) body atom. These are the variables kept symbolic by
    /// semi-grounding.
    pub fn limit_bound_vars(&self, decls: &Decls) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for atom in &self.body_std {
            let binds = decls
                .get(&atom.pred)
                .map(|d| d.kind.binds_limit_variables())
                .unwrap_or(false);
            if binds {
                if let Some(t) = atom.numeric_arg() {
                    t.collect_vars(&mut out);
                }
            }
        }
        out
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.head)?;
        if !self.is_fact() {
            write!(f, " :- ")?;
            let mut first = true;
            for atom in &self.body_std {
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                write!(f, "{}", atom)?;
            }
            for cmp in &self.body_cmp {
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                write!(f, "{}", cmp)?;
            }
        }
        write!(f, ".")
    }
}

pub type Decls = std::collections::BTreeMap<String, PredicateDecl>;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Program {
    pub decls: Decls,
    pub rules: Vec<Rule>,
}

impl Program {
    pub fn new(decls: Decls, rules: Vec<Rule>) -> Self {
        Program { decls, rules }
    }

    pub fn decl(&self, pred: &str) -> Option<&PredicateDecl> {
        self.decls.get(pred)
    }

    /// Object constants occurring in the program.
    pub fn object_constants(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for rule in &self.rules {
            for atom in std::iter::once(&rule.head).chain(rule.body_std.iter()) {
                for obj in atom.object_args() {
                    if let ObjectTerm::Const(c) = obj {
                        out.insert(c.clone());
                    }
                }
            }
        }
        out
    }

    /// Integer constants occurring in the program.
    pub fn integer_constants(&self) -> BTreeSet<BigInt> {
        let mut out = BTreeSet::new();
        for rule in &self.rules {
            for atom in std::iter::once(&rule.head).chain(rule.body_std.iter()) {
                if let Some(t) = atom.numeric_arg() {
                    t.collect_ints(&mut out);
                }
            }
            for cmp in &rule.body_cmp {
                cmp.lhs.collect_ints(&mut out);
                cmp.rhs.collect_ints(&mut out);
            }
        }
        out
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for decl in self.decls.values() {
            if decl.kind == PredicateKind::IntegerBuiltin {
                continue;
            }
            write!(f, "pred {}(", decl.name)?;
            for (i, sort) in decl.sorts.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                match sort {
                    Sort::Object => write!(f, "obj")?,
                    Sort::Numeric => match decl.kind {
                        PredicateKind::MinLimit => write!(f, "min int")?,
                        PredicateKind::MaxLimit => write!(f, "max int")?,
                        _ => write!(f, "int")?,
                    },
                }
            }
            writeln!(f, ").")?;
        }
        for rule in &self.rules {
            writeln!(f, "{}", rule)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decl_shape_enforced() {
        assert!(PredicateDecl::new("p", vec![Sort::Object], PredicateKind::Object).is_ok());
        assert!(PredicateDecl::new("p", vec![Sort::Numeric], PredicateKind::Object).is_err());
        assert!(PredicateDecl::new(
            "q",
            vec![Sort::Numeric, Sort::Object],
            PredicateKind::MinLimit
        )
        .is_err());
        assert!(PredicateDecl::new(
            "q",
            vec![Sort::Object, Sort::Numeric],
            PredicateKind::MaxLimit
        )
        .is_ok());
    }

    #[test]
    fn term_folding_and_display() {
        let t = NumTerm::add(NumTerm::int(2), NumTerm::int(3));
        assert_eq!(t.fold(), NumTerm::int(5));
        let u = NumTerm::mul(
            NumTerm::add(NumTerm::var("X"), NumTerm::int(1)),
            NumTerm::int(2),
        );
        assert_eq!(u.to_string(), "(X + 1) * 2");
        let neg = NumTerm::neg(NumTerm::var("X"));
        assert_eq!(neg.to_string(), "-X");
        let neg_prod = NumTerm::neg(NumTerm::mul(NumTerm::var("X"), NumTerm::var("Y")));
        assert_eq!(neg_prod.to_string(), "-(X * Y)");
    }

    #[test]
    fn substitution_folds() {
        let t = NumTerm::add(NumTerm::var("M"), NumTerm::var("N"));
        let folded = t.substitute(&|v| (v == "N").then(|| NumTerm::int(4)));
        assert_eq!(folded, NumTerm::add(NumTerm::var("M"), NumTerm::int(4)));
        let ground = folded.substitute(&|v| (v == "M").then(|| NumTerm::int(1)));
        assert_eq!(ground, NumTerm::int(5));
    }
}
