//! Character-polynomial tables for the exceptional groups, and their
//! line-oriented text format.
//!
//! A table file looks like:
//!
//! ```text
//! # optional comments
//! group G6
//! degrees 4 12
//! coexponents 1 9
//! order_m 12
//! basis 1
//! basis (x - 1)/4
//! basis (x - 1)*(x - 9)/48
//! entry dim=1 chi=1 f=48*P2+96*P1+48
//! entry dim=1 chi=-z3 f=48*P2
//! ```
//!
//! `order_m` fixes the cyclotomic order every `chi` value lives in; `z<e>^<j>`
//! denotes ζ_e^j (any e dividing order_m) and `i` abbreviates z4. The `f`
//! polynomials may be written either in the power basis (`x^2 + 14*x + 33`)
//! or as combinations of the declared `basis` polynomials P0, P1, ...
//! Loading a serialized table reproduces it exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::cyclo::CycValue;
use crate::coeffs::UniPoly;
use crate::error::{Error, Result};
use crate::wreath::GroupSpec;

/// A character polynomial, kept in whichever form the file used.
#[derive(Clone, Debug, PartialEq)]
pub enum FPoly {
    Power(UniPoly),
    /// Coefficients with respect to the table's basis block, index = degree.
    Basis(Vec<BigRational>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct CharEntry {
    pub dim: u64,
    /// χ(c⁻¹) as a cyclotomic integer.
    pub chi: CycValue,
    pub f: FPoly,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CharTable {
    pub name: String,
    pub degrees: Vec<u64>,
    pub coexponents: Vec<u64>,
    pub order_m: usize,
    pub basis: Option<Vec<UniPoly>>,
    pub entries: Vec<CharEntry>,
}

impl CharTable {
    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn order(&self) -> BigInt {
        self.degrees.iter().map(|&d| BigInt::from(d)).product()
    }

    pub fn group_spec(&self) -> GroupSpec {
        GroupSpec::exceptional(&self.name, self.degrees.clone(), self.coexponents.clone())
    }

    /// The entry's f, resolved to the power basis.
    pub fn f_power(&self, entry: &CharEntry) -> UniPoly {
        match &entry.f {
            FPoly::Power(p) => p.clone(),
            FPoly::Basis(coeffs) => {
                let basis = self
                    .basis
                    .as_ref()
                    .expect("basis coefficients without a basis block");
                let mut acc = UniPoly::zero();
                for (i, c) in coeffs.iter().enumerate() {
                    acc = acc.add(&basis[i].scale(c));
                }
                acc
            }
        }
    }

    pub fn parse(source: &str) -> Result<CharTable> {
        let mut name = None;
        let mut degrees = None;
        let mut coexponents = None;
        let mut order_m = None;
        let mut basis: Vec<UniPoly> = Vec::new();
        let mut raw_entries: Vec<(u64, String, String)> = Vec::new();
        for (lineno, raw) in source.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| Error::Table(format!("line {}: {msg}", lineno + 1));
            if let Some(rest) = line.strip_prefix("group ") {
                name = Some(rest.trim().to_string());
            } else if let Some(rest) = line.strip_prefix("degrees ") {
                degrees = Some(parse_ints(rest).map_err(err)?);
            } else if let Some(rest) = line.strip_prefix("coexponents ") {
                coexponents = Some(parse_ints(rest).map_err(err)?);
            } else if let Some(rest) = line.strip_prefix("order_m ") {
                order_m = Some(
                    rest.trim()
                        .parse::<usize>()
                        .map_err(|e| err(format!("bad order_m: {e}")))?,
                );
            } else if let Some(rest) = line.strip_prefix("basis ") {
                let value = eval_poly(&parse_expr(rest).map_err(err)?, usize::MAX)
                    .map_err(err)?;
                match value.into_power() {
                    Some(p) => basis.push(p),
                    None => return Err(err("basis polynomials must be in powers of x".into())),
                }
            } else if let Some(rest) = line.strip_prefix("entry ") {
                let dim_part = rest
                    .split_once("chi=")
                    .ok_or_else(|| err("entry missing chi=".into()))?;
                let dim_str = dim_part
                    .0
                    .trim()
                    .strip_prefix("dim=")
                    .ok_or_else(|| err("entry missing dim=".into()))?;
                let dim = dim_str
                    .trim()
                    .parse::<u64>()
                    .map_err(|e| err(format!("bad dim: {e}")))?;
                let (chi_str, f_str) = dim_part
                    .1
                    .split_once("f=")
                    .ok_or_else(|| err("entry missing f=".into()))?;
                raw_entries.push((dim, chi_str.trim().to_string(), f_str.trim().to_string()));
            } else {
                return Err(err(format!("unrecognized line: {line}")));
            }
        }
        let name = name.ok_or_else(|| Error::Table("missing group line".into()))?;
        let degrees = degrees.ok_or_else(|| Error::Table("missing degrees line".into()))?;
        let coexponents =
            coexponents.ok_or_else(|| Error::Table("missing coexponents line".into()))?;
        let order_m = order_m.ok_or_else(|| Error::Table("missing order_m line".into()))?;
        if degrees.len() != coexponents.len() {
            return Err(Error::Table(
                "degrees and coexponents must have the same length".into(),
            ));
        }
        if !basis.is_empty() {
            if basis.len() != degrees.len() + 1 {
                return Err(Error::Table(format!(
                    "basis block must list P0..P{}",
                    degrees.len()
                )));
            }
            for (i, b) in basis.iter().enumerate() {
                if b.degree() != Some(i) {
                    return Err(Error::Table(format!("basis P{i} must have degree {i}")));
                }
            }
            if basis[0] != UniPoly::one() {
                return Err(Error::Table("basis P0 must be the constant 1".into()));
            }
        }
        let mut entries = Vec::new();
        for (dim, chi_str, f_str) in raw_entries {
            let chi = eval_cyc(&parse_expr(&chi_str).map_err(Error::Table)?, order_m)
                .map_err(Error::Table)?;
            let value = eval_poly(
                &parse_expr(&f_str).map_err(Error::Table)?,
                if basis.is_empty() { 0 } else { basis.len() - 1 },
            )
            .map_err(Error::Table)?;
            let f = value.into_fpoly(basis.len())?;
            entries.push(CharEntry { dim, chi, f });
        }
        Ok(CharTable {
            name,
            degrees,
            coexponents,
            order_m,
            basis: if basis.is_empty() { None } else { Some(basis) },
            entries,
        })
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("group {}\n", self.name));
        out.push_str(&format!("degrees {}\n", join_ints(&self.degrees)));
        out.push_str(&format!("coexponents {}\n", join_ints(&self.coexponents)));
        out.push_str(&format!("order_m {}\n", self.order_m));
        if let Some(basis) = &self.basis {
            for b in basis {
                out.push_str(&format!("basis {}\n", format_power(b)));
            }
        }
        for e in &self.entries {
            let f = match &e.f {
                FPoly::Power(p) => format_power(p),
                FPoly::Basis(coeffs) => format_basis(coeffs),
            };
            out.push_str(&format!(
                "entry dim={} chi={} f={}\n",
                e.dim,
                format_cyc(&e.chi, self.order_m),
                f
            ));
        }
        out
    }
}

fn parse_ints(s: &str) -> std::result::Result<Vec<u64>, String> {
    s.split_whitespace()
        .map(|w| w.parse::<u64>().map_err(|e| format!("bad integer {w}: {e}")))
        .collect()
}

fn join_ints(v: &[u64]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

// ---- expression parsing -------------------------------------------------

#[derive(Clone, Debug)]
enum Expr {
    Int(BigInt),
    Var,
    Basis(usize),
    Root(usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Var,
    Basis(usize),
    Root(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> std::result::Result<Vec<Token>, String> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut pos = 0;
    while pos < chars.len() {
        let c = chars[pos];
        match c {
            ' ' | '\t' => pos += 1,
            '+' => {
                out.push(Token::Plus);
                pos += 1;
            }
            '-' => {
                out.push(Token::Minus);
                pos += 1;
            }
            '*' => {
                out.push(Token::Star);
                pos += 1;
            }
            '/' => {
                out.push(Token::Slash);
                pos += 1;
            }
            '^' => {
                out.push(Token::Caret);
                pos += 1;
            }
            '(' => {
                out.push(Token::LParen);
                pos += 1;
            }
            ')' => {
                out.push(Token::RParen);
                pos += 1;
            }
            '0'..='9' => {
                let start = pos;
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                let lit: String = chars[start..pos].iter().collect();
                out.push(Token::Int(lit.parse().unwrap()));
            }
            'x' => {
                out.push(Token::Var);
                pos += 1;
            }
            'i' => {
                out.push(Token::Root(4));
                pos += 1;
            }
            'P' | 'z' => {
                let is_basis = c == 'P';
                pos += 1;
                let start = pos;
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                if start == pos {
                    return Err(format!("expected digits after {c}"));
                }
                let value: usize = chars[start..pos].iter().collect::<String>().parse().unwrap();
                out.push(if is_basis {
                    Token::Basis(value)
                } else {
                    Token::Root(value)
                });
            }
            other => return Err(format!("unexpected character {other:?}")),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> std::result::Result<Expr, String> {
        let mut acc = if self.peek() == Some(&Token::Minus) {
            self.next();
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.next();
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.next();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> std::result::Result<Expr, String> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.next();
                    acc = Expr::Mul(Box::new(acc), Box::new(self.power()?));
                }
                Some(Token::Slash) => {
                    self.next();
                    acc = Expr::Div(Box::new(acc), Box::new(self.power()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> std::result::Result<Expr, String> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.next();
            match self.next() {
                Some(Token::Int(e)) => {
                    let e = u32::try_from(e).map_err(|_| "exponent too large".to_string())?;
                    Ok(Expr::Pow(Box::new(base), e))
                }
                _ => Err("expected integer exponent after ^".into()),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> std::result::Result<Expr, String> {
        match self.next() {
            Some(Token::Int(v)) => Ok(Expr::Int(v)),
            Some(Token::Var) => Ok(Expr::Var),
            Some(Token::Basis(i)) => Ok(Expr::Basis(i)),
            Some(Token::Root(m)) => Ok(Expr::Root(m)),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err("missing closing parenthesis".into()),
                }
            }
            other => Err(format!("unexpected token {other:?}")),
        }
    }
}

fn parse_expr(s: &str) -> std::result::Result<Expr, String> {
    let mut parser = Parser {
        tokens: tokenize(s)?,
        pos: 0,
    };
    let e = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(format!("trailing tokens in {s:?}"));
    }
    Ok(e)
}

// ---- polynomial evaluation ----------------------------------------------

/// Value of a polynomial expression: a power-basis part plus a linear
/// combination of the declared P-basis symbols.
struct PolyValue {
    power: UniPoly,
    basis: Vec<BigRational>,
}

impl PolyValue {
    fn scalar(&self) -> Option<BigRational> {
        if self.basis.iter().all(|c| c.is_zero()) && self.power.degree().unwrap_or(0) == 0 {
            Some(self.power.coeff(0))
        } else {
            None
        }
    }

    fn is_pure_power(&self) -> bool {
        self.basis.iter().all(|c| c.is_zero())
    }

    fn into_power(self) -> Option<UniPoly> {
        self.is_pure_power().then_some(self.power)
    }

    fn into_fpoly(self, basis_len: usize) -> Result<FPoly> {
        if self.is_pure_power() {
            return Ok(FPoly::Power(self.power));
        }
        if self.power.degree().unwrap_or(0) > 0 {
            return Err(Error::Table(
                "f mixes powers of x with P-basis symbols".into(),
            ));
        }
        let mut coeffs = self.basis;
        coeffs.resize(basis_len.max(coeffs.len()), BigRational::zero());
        coeffs[0] += self.power.coeff(0); // constants count as P0
        Ok(FPoly::Basis(coeffs))
    }
}

fn eval_poly(expr: &Expr, max_basis: usize) -> std::result::Result<PolyValue, String> {
    let scalar_value = |v: BigRational| PolyValue {
        power: UniPoly::constant(v),
        basis: Vec::new(),
    };
    match expr {
        Expr::Int(v) => Ok(scalar_value(BigRational::from_integer(v.clone()))),
        Expr::Var => Ok(PolyValue {
            power: UniPoly::x(),
            basis: Vec::new(),
        }),
        Expr::Basis(i) => {
            if *i > max_basis {
                return Err(format!("P{i} is not declared in the basis block"));
            }
            let mut basis = vec![BigRational::zero(); i + 1];
            basis[*i] = BigRational::one();
            Ok(PolyValue {
                power: UniPoly::zero(),
                basis,
            })
        }
        Expr::Root(_) => Err("root of unity in a polynomial context".into()),
        Expr::Neg(a) => {
            let a = eval_poly(a, max_basis)?;
            Ok(PolyValue {
                power: a.power.scale(&-BigRational::one()),
                basis: a.basis.iter().map(|c| -c).collect(),
            })
        }
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            let a = eval_poly(a, max_basis)?;
            let mut b = eval_poly(b, max_basis)?;
            if matches!(expr, Expr::Sub(..)) {
                b = PolyValue {
                    power: b.power.scale(&-BigRational::one()),
                    basis: b.basis.iter().map(|c| -c).collect(),
                };
            }
            let mut basis = a.basis;
            if b.basis.len() > basis.len() {
                basis.resize(b.basis.len(), BigRational::zero());
            }
            for (i, c) in b.basis.iter().enumerate() {
                basis[i] += c;
            }
            Ok(PolyValue {
                power: a.power.add(&b.power),
                basis,
            })
        }
        Expr::Mul(a, b) => {
            let a = eval_poly(a, max_basis)?;
            let b = eval_poly(b, max_basis)?;
            if let Some(s) = a.scalar() {
                return Ok(PolyValue {
                    power: b.power.scale(&s),
                    basis: b.basis.iter().map(|c| c * &s).collect(),
                });
            }
            if let Some(s) = b.scalar() {
                return Ok(PolyValue {
                    power: a.power.scale(&s),
                    basis: a.basis.iter().map(|c| c * &s).collect(),
                });
            }
            if a.is_pure_power() && b.is_pure_power() {
                return Ok(PolyValue {
                    power: a.power.mul(&b.power),
                    basis: Vec::new(),
                });
            }
            Err("P-basis symbols may only be combined linearly".into())
        }
        Expr::Div(a, b) => {
            let a = eval_poly(a, max_basis)?;
            let b = eval_poly(b, max_basis)?;
            let s = b.scalar().ok_or("division is only by constants")?;
            if s.is_zero() {
                return Err("division by zero".into());
            }
            let inv = s.recip();
            Ok(PolyValue {
                power: a.power.scale(&inv),
                basis: a.basis.iter().map(|c| c * &inv).collect(),
            })
        }
        Expr::Pow(a, e) => {
            let a = eval_poly(a, max_basis)?;
            if !a.is_pure_power() {
                return Err("cannot exponentiate P-basis symbols".into());
            }
            let mut acc = UniPoly::one();
            for _ in 0..*e {
                acc = acc.mul(&a.power);
            }
            Ok(PolyValue {
                power: acc,
                basis: Vec::new(),
            })
        }
    }
}

// ---- cyclotomic evaluation ----------------------------------------------

fn eval_cyc(expr: &Expr, order_m: usize) -> std::result::Result<CycValue, String> {
    match expr {
        Expr::Int(v) => Ok(CycValue::integer(order_m, v.clone())),
        Expr::Root(e) => {
            if order_m % e != 0 {
                return Err(format!("root order {e} does not divide order_m {order_m}"));
            }
            Ok(CycValue::root(*e, 1).lift(order_m))
        }
        Expr::Neg(a) => Ok(eval_cyc(a, order_m)?.neg()),
        Expr::Add(a, b) => Ok(eval_cyc(a, order_m)?.add(&eval_cyc(b, order_m)?)),
        Expr::Sub(a, b) => Ok(eval_cyc(a, order_m)?.sub(&eval_cyc(b, order_m)?)),
        Expr::Mul(a, b) => Ok(eval_cyc(a, order_m)?.mul(&eval_cyc(b, order_m)?)),
        Expr::Pow(a, e) => {
            let base = eval_cyc(a, order_m)?;
            let mut acc = CycValue::integer(order_m, 1);
            for _ in 0..*e {
                acc = acc.mul(&base);
            }
            Ok(acc)
        }
        Expr::Var | Expr::Basis(_) => Err("x or P symbols in a character value".into()),
        Expr::Div(..) => Err("division in a character value".into()),
    }
}

// ---- canonical formatting -----------------------------------------------

fn push_term(out: &mut String, first: bool, coeff: &BigRational, atom: Option<String>) {
    let negative = coeff.is_negative();
    let magnitude = if negative { -coeff.clone() } else { coeff.clone() };
    if first {
        if negative {
            out.push('-');
        }
    } else if negative {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    let coeff_str = if magnitude.is_integer() {
        magnitude.to_integer().to_string()
    } else {
        format!("{}/{}", magnitude.numer(), magnitude.denom())
    };
    match atom {
        None => out.push_str(&coeff_str),
        Some(a) if magnitude.is_one() => out.push_str(&a),
        Some(a) => out.push_str(&format!("{coeff_str}*{a}")),
    }
}

fn format_power(p: &UniPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    let mut first = true;
    for i in (0..=p.degree().unwrap()).rev() {
        let c = p.coeff(i);
        if c.is_zero() {
            continue;
        }
        let atom = match i {
            0 => None,
            1 => Some("x".to_string()),
            _ => Some(format!("x^{i}")),
        };
        push_term(&mut out, first, &c, atom);
        first = false;
    }
    out
}

fn format_basis(coeffs: &[BigRational]) -> String {
    if coeffs.iter().all(|c| c.is_zero()) {
        return "0".into();
    }
    let mut out = String::new();
    let mut first = true;
    for i in (0..coeffs.len()).rev() {
        let c = &coeffs[i];
        if c.is_zero() {
            continue;
        }
        let atom = if i == 0 { None } else { Some(format!("P{i}")) };
        push_term(&mut out, first, c, atom);
        first = false;
    }
    out
}

fn format_cyc(v: &CycValue, order_m: usize) -> String {
    let reduced = v.lift(order_m / v.order() * v.order()).reduced();
    if reduced.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    let mut first = true;
    for (j, c) in reduced.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let atom = match j {
            0 => None,
            1 => Some(format!("z{order_m}")),
            _ => Some(format!("z{order_m}^{j}")),
        };
        push_term(
            &mut out,
            first,
            &BigRational::from_integer(c.clone()),
            atom,
        );
        first = false;
    }
    out
}

// ---- embedded data -------------------------------------------------------

const EMBEDDED: &[(&str, &str)] = &[
    ("G4", include_str!("data/g4.ct")),
    ("G5", include_str!("data/g5.ct")),
    ("G6", include_str!("data/g6.ct")),
    ("G8", include_str!("data/g8.ct")),
    ("G9", include_str!("data/g9.ct")),
    ("G10", include_str!("data/g10.ct")),
    ("G14", include_str!("data/g14.ct")),
    ("G16", include_str!("data/g16.ct")),
    ("G17", include_str!("data/g17.ct")),
    ("G18", include_str!("data/g18.ct")),
    ("G20", include_str!("data/g20.ct")),
    ("G21", include_str!("data/g21.ct")),
    ("G23", include_str!("data/g23.ct")),
    ("G24", include_str!("data/g24.ct")),
    ("G25", include_str!("data/g25.ct")),
    ("G26", include_str!("data/g26.ct")),
    ("G27", include_str!("data/g27.ct")),
    ("G32", include_str!("data/g32.ct")),
];

pub fn embedded_table_names() -> Vec<&'static str> {
    EMBEDDED.iter().map(|(n, _)| *n).collect()
}

pub fn load_embedded(name: &str) -> Result<CharTable> {
    let source = EMBEDDED
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, s)| *s)
        .ok_or_else(|| Error::Table(format!("no embedded table named {name}")))?;
    let table = CharTable::parse(source)?;
    debug_assert_eq!(table.name, name);
    Ok(table)
}
