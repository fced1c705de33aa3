//! The expression language.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := INT '*' factor | '-' factor | INT | atom
//! atom   := '[' group ('/' group)? ']' | 'cyc(' INT ')' | 'xn1(' INT ')'
//!         | 'b(' INT ')' | '(' expr ')'
//! group  := poly | '(' poly ')'
//! poly   := signed integer polynomial in x, '^' for powers, implicit
//!           multiplication between a coefficient and x
//! ```
//!
//! A bare integer `n` denotes `n` times the multiplicative identity.

use std::collections::BTreeSet;
use std::fmt;

use mring_core::poly::cyclotomic;
use mring_core::{MElem, MonicPoly, Rational};
use num_bigint::BigInt;
use num_bigint::Sign;

/// Integer polynomial in ascending order, trimmed, never zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Option<Self> {
        while coeffs.last().is_some_and(|c| c.sign() == Sign::NoSign) {
            coeffs.pop();
        }
        (!coeffs.is_empty()).then_some(Self(coeffs))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    /// Divides through by the leading coefficient.
    pub fn to_monic(&self) -> MonicPoly {
        let raw = self
            .0
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        MonicPoly::normalize(raw).expect("nonzero polynomial")
    }
}

/// Parenthesizes a polynomial with more than one term.
struct Grouped<'a>(&'a IntPoly);

impl fmt::Display for Grouped<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self
            .0
            .coeffs()
            .iter()
            .filter(|c| c.sign() != Sign::NoSign)
            .count()
            > 1
        {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.0.iter().enumerate().rev() {
            if c.sign() == Sign::NoSign {
                continue;
            }
            let neg = c.sign() == Sign::Minus;
            let mag = c.magnitude();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = *mag == 1u32.into();
            if e == 0 {
                write!(f, "{mag}")?;
            } else {
                if !unit {
                    write!(f, "{mag}")?;
                }
                f.write_str("x")?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Bracket(IntPoly, Option<IntPoly>),
    Cyc(u64),
    Xn1(u64),
    Basis(u64),
    Neg(Box<Expr>),
    /// `n * e` with a literal nonnegative `n`.
    Scalar(BigInt, Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: expected {}, found {found}", expected_list(.expected))]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: BTreeSet<String>,
    pub found: String,
}

fn expected_list(e: &BTreeSet<String>) -> String {
    let v: Vec<&str> = e.iter().map(String::as_str).collect();
    match v.len() {
        0 => "nothing".into(),
        1 => v[0].into(),
        _ => format!("one of {}", v.join(", ")),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    X,
    Ident(String),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "integer {n}"),
            Tok::X => f.write_str("'x'"),
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().expect("peeked");
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let mut s = String::new();
            while chars.peek().is_some_and(|c| c.is_ascii_digit()) {
                s.push(bump(&mut chars));
            }
            Tok::Int(s.parse().expect("ascii digits"))
        } else if c.is_ascii_alphabetic() {
            let mut s = String::new();
            while chars.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
                s.push(bump(&mut chars));
            }
            if s == "x" {
                Tok::X
            } else {
                Tok::Ident(s)
            }
        } else if "+-*/^[]()".contains(c) {
            Tok::Sym(bump(&mut chars))
        } else {
            return Err(ParseError {
                line: l,
                column: col,
                expected: BTreeSet::new(),
                found: format!("unexpected character {c:?}"),
            });
        };
        out.push(Spanned {
            tok,
            line: l,
            column: col,
        });
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.pos + 1).min(self.toks.len() - 1)].tok
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> PResult<T> {
        let s = &self.toks[self.pos];
        Err(ParseError {
            line: s.line,
            column: s.column,
            expected: expected.iter().map(|e| e.to_string()).collect(),
            found: s.tok.to_string(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.next();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.fail(&[&format!("'{c}'")])
        }
    }

    fn expr(&mut self) -> PResult<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> PResult<Expr> {
        let mut lhs = self.factor()?;
        while self.eat('*') {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> PResult<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        if let Tok::Int(n) = self.peek().clone() {
            self.next();
            if self.eat('*') {
                return Ok(Expr::Scalar(n, Box::new(self.factor()?)));
            }
            return Ok(Expr::Int(n));
        }
        self.atom()
    }

    fn atom(&mut self) -> PResult<Expr> {
        const STARTS: &[&str] = &["'('", "'-'", "'['", "'b('", "'cyc('", "'xn1('", "integer"];
        match self.peek().clone() {
            Tok::Sym('[') => {
                self.next();
                let num = self.grouped_poly()?;
                let den = if self.eat('/') {
                    Some(self.grouped_poly()?)
                } else {
                    None
                };
                if !self.eat(']') {
                    let mut exp = vec!["']'", "'+'", "'-'"];
                    if den.is_none() {
                        exp.push("'/'");
                    }
                    return self.fail(&exp);
                }
                Ok(Expr::Bracket(num, den))
            }
            Tok::Sym('(') => {
                self.next();
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.fail(&["')'", "'*'", "'+'", "'-'"]);
                }
                Ok(e)
            }
            Tok::Ident(name) if matches!(name.as_str(), "cyc" | "xn1" | "b") => {
                self.next();
                self.expect('(')?;
                let n = self.positive_int()?;
                self.expect(')')?;
                Ok(match name.as_str() {
                    "cyc" => Expr::Cyc(n),
                    "xn1" => Expr::Xn1(n),
                    _ => Expr::Basis(n),
                })
            }
            _ => self.fail(STARTS),
        }
    }

    /// A polynomial, optionally wrapped in one pair of parentheses.
    fn grouped_poly(&mut self) -> PResult<IntPoly> {
        if !self.eat('(') {
            return self.poly();
        }
        let p = self.poly()?;
        self.expect(')')?;
        Ok(p)
    }

    fn positive_int(&mut self) -> PResult<u64> {
        match self.peek().clone() {
            Tok::Int(n) => match u64::try_from(&n) {
                Ok(v) if v >= 1 => {
                    self.next();
                    Ok(v)
                }
                _ => self.fail(&["positive integer"]),
            },
            _ => self.fail(&["positive integer"]),
        }
    }

    /// `['-'] mono (('+' | '-') mono)*`, collected densely.
    fn poly(&mut self) -> PResult<IntPoly> {
        let start = self.pos;
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut sign = if self.eat('-') { -1 } else { 1 };
        loop {
            let (c, e) = self.monomial()?;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigInt::from(0));
            }
            coeffs[e] += c * sign;
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else {
                break;
            }
        }
        IntPoly::new(coeffs).ok_or_else(|| {
            let s = &self.toks[start];
            ParseError {
                line: s.line,
                column: s.column,
                expected: ["nonzero polynomial".to_string()].into(),
                found: "the zero polynomial".into(),
            }
        })
    }

    /// `INT`, `INT x`, `INT '*' x`, `x`, each `x` optionally `^ INT`.
    fn monomial(&mut self) -> PResult<(BigInt, usize)> {
        let coeff = match self.peek().clone() {
            Tok::Int(n) => {
                self.next();
                if *self.peek() == Tok::Sym('*') && *self.peek2() == Tok::X {
                    self.next();
                }
                Some(n)
            }
            Tok::X => None,
            _ => return self.fail(&["'x'", "integer"]),
        };
        if *self.peek() != Tok::X {
            return Ok((coeff.expect("integer read"), 0));
        }
        self.next();
        let mut e = 1usize;
        if self.eat('^') {
            e = match self.peek().clone() {
                Tok::Int(n) => match usize::try_from(&n) {
                    Ok(v) if v <= 1 << 20 => {
                        self.next();
                        v
                    }
                    _ => return self.fail(&["exponent below 2^20"]),
                },
                _ => return self.fail(&["nonnegative integer exponent"]),
            };
        }
        Ok((coeff.unwrap_or_else(|| BigInt::from(1)), e))
    }
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.fail(&["'*'", "'+'", "'-'", "end of input"]);
    }
    Ok(e)
}

/// A bare integer followed by `*` would reparse as a scalar prefix, so
/// integers are wrapped wherever a `*` may follow them.
fn wrap_factor(e: &Expr) -> bool {
    prec(e) < 2 || matches!(e, Expr::Int(_))
}

fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 0,
        Expr::Mul(..) => 1,
        _ => 2,
    }
}

struct Wrapped<'a>(&'a Expr, bool);

impl fmt::Display for Wrapped<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// Canonical form; parsing it gives back the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Bracket(p, None) => write!(f, "[{p}]"),
            Expr::Bracket(p, Some(q)) => write!(f, "[{} / {}]", Grouped(p), Grouped(q)),
            Expr::Cyc(n) => write!(f, "cyc({n})"),
            Expr::Xn1(n) => write!(f, "xn1({n})"),
            Expr::Basis(n) => write!(f, "b({n})"),
            Expr::Neg(e) => write!(f, "-{}", Wrapped(e, wrap_factor(e))),
            Expr::Scalar(n, e) => write!(f, "{n}*{}", Wrapped(e, wrap_factor(e))),
            Expr::Add(a, b) => write!(f, "{a} + {}", Wrapped(b, prec(b) == 0)),
            Expr::Sub(a, b) => write!(f, "{a} - {}", Wrapped(b, prec(b) == 0)),
            Expr::Mul(a, b) => {
                let wrap_a = prec(a) == 0 || matches!(**a, Expr::Int(_));
                write!(f, "{} * {}", Wrapped(a, wrap_a), Wrapped(b, wrap_factor(b)))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("scalar {0} does not fit in 64 bits")]
    ScalarTooLarge(BigInt),
}

fn small(n: &BigInt) -> Result<i64, EvalError> {
    i64::try_from(n).map_err(|_| EvalError::ScalarTooLarge(n.clone()))
}

fn index(n: u64) -> usize {
    usize::try_from(n).expect("index fits in usize")
}

pub fn eval(e: &Expr) -> Result<MElem, EvalError> {
    Ok(match e {
        Expr::Int(n) => MElem::one().scalar(small(n)?),
        Expr::Bracket(p, q) => {
            let den = q.as_ref().map_or_else(MonicPoly::one, IntPoly::to_monic);
            MElem::new(p.to_monic(), den)
        }
        Expr::Cyc(n) => MElem::from_poly(cyclotomic(*n)),
        Expr::Xn1(n) => MElem::x_pow_minus_one(index(*n)),
        Expr::Basis(n) => MElem::basis(index(*n)),
        Expr::Neg(a) => eval(a)?.neg(),
        Expr::Scalar(n, a) => eval(a)?.scalar(small(n)?),
        Expr::Add(a, b) => eval(a)?.add(&eval(b)?),
        Expr::Sub(a, b) => eval(a)?.sub(&eval(b)?),
        Expr::Mul(a, b) => eval(a)?.mul(&eval(b)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(v: &[i64]) -> MElem {
        MElem::from_poly(MonicPoly::from_ints(v).unwrap())
    }

    #[test]
    fn parses_documented_examples() {
        let e = parse("[x-2] + 3*[x^3-1]").unwrap();
        assert!(matches!(&e, Expr::Add(a, b)
            if matches!(**a, Expr::Bracket(..)) && matches!(**b, Expr::Scalar(..))));
        let v = eval(&parse("b(4) - b(2)").unwrap()).unwrap();
        assert_eq!(v, el(&[1, 0, 1]).sub(&MElem::x().scalar(2)));
        let err = parse("[x^2-3x+2").unwrap_err();
        assert!(err.expected.contains("']'"), "{err}");
        assert_eq!((err.line, err.column), (1, 10));
    }

    #[test]
    fn polynomial_literals() {
        assert_eq!(
            eval(&parse("[x^2 - 3x + 2]").unwrap()).unwrap(),
            el(&[2, -3, 1])
        );
        assert_eq!(
            eval(&parse("[-1 + x^2]").unwrap()).unwrap(),
            el(&[-1, 0, 1])
        );
        assert_eq!(
            eval(&parse("[3*x - 3x + x]").unwrap()).unwrap(),
            el(&[0, 1])
        );
        assert_eq!(
            eval(&parse("[(x-3)/(x^2+1)]").unwrap()).unwrap(),
            el(&[-3, 1]).sub(&el(&[1, 0, 1]))
        );
        assert_eq!(parse("[(x)]").unwrap(), parse("[x]").unwrap());
        assert!(parse("[((x))]").is_err());
        assert!(parse("[(x]").is_err());
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in [
            "", "[x^-1]", "[x^1.5]", "[0]", "[x - x]", "cyc(0)", "3 +", "[x] [x]", "(b(2)", "y",
            "[x]%",
        ] {
            assert!(parse(bad).is_err(), "{bad:?} parsed");
        }
    }

    #[test]
    fn precedence() {
        // unary minus binds tighter than '*', which binds tighter than '+'
        let e = parse("-[x] * [x-2] + 2*[x]").unwrap();
        let want = MElem::x()
            .neg()
            .mul(&el(&[-2, 1]))
            .add(&MElem::x().scalar(2));
        assert_eq!(eval(&e).unwrap(), want);
        assert_eq!(eval(&parse("3").unwrap()).unwrap(), MElem::one().scalar(3));
    }

    #[test]
    fn printing_is_canonical() {
        let e = parse("(3) * [x] - -([x-1] + b(2))").unwrap();
        assert_eq!(e.to_string(), "(3) * [x] - -([x - 1] + b(2))");
        assert_eq!(parse(&e.to_string()).unwrap(), e);
    }
}
