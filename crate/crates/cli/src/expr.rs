//! Arithmetic expressions in one variable `x`.
//!
//! Precedence from loosest to tightest: `+ -`, `* /`, unary `-`, `^`.
//! `^` is right-associative, so `-2^2` is `-4` and `2^3^2` is `512`.

use std::fmt;

use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Tan,
    Exp,
    Log,
    Sqrt,
    Abs,
}

impl Func {
    fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "tan" => Func::Tan,
            "exp" => Func::Exp,
            "log" => Func::Log,
            "sqrt" => Func::Sqrt,
            "abs" => Func::Abs,
            _ => return None,
        })
    }

    fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tan => "tan",
            Func::Exp => "exp",
            Func::Log => "log",
            Func::Sqrt => "sqrt",
            Func::Abs => "abs",
        }
    }

    fn apply(self, v: f64) -> f64 {
        match self {
            Func::Sin => v.sin(),
            Func::Cos => v.cos(),
            Func::Tan => v.tan(),
            Func::Exp => v.exp(),
            Func::Log => v.ln(),
            Func::Sqrt => v.sqrt(),
            Func::Abs => v.abs(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    X,
    Neg(Box<Expr>),
    Bin(Op, Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxError {
    /// Byte offset into the source.
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at offset {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for SyntaxError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(v) => write!(f, "number {v}"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, SyntaxError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == b'.' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                i += 1;
            }
            if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
                let mut j = i + 1;
                if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                    j += 1;
                }
                if j < bytes.len() && bytes[j].is_ascii_digit() {
                    while j < bytes.len() && bytes[j].is_ascii_digit() {
                        j += 1;
                    }
                    i = j;
                }
            }
            let text = &src[start..i];
            let value = text.parse::<f64>().map_err(|_| SyntaxError {
                offset: start,
                message: format!("malformed number `{text}`"),
            })?;
            out.push((start, Tok::Num(value)));
        } else if c.is_ascii_alphabetic() || c == b'_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(src[start..i].to_string())));
        } else if b"+-*/^()".contains(&c) {
            out.push((i, Tok::Sym(c as char)));
            i += 1;
        } else {
            let ch = src[i..].chars().next().unwrap();
            return Err(SyntaxError {
                offset: i,
                message: format!("unexpected character `{ch}`"),
            });
        }
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, expected: &str) -> SyntaxError {
        SyntaxError {
            offset: self.offset(),
            message: format!("expected {expected}, found {}", self.peek()),
        }
    }

    fn sum(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.product()?;
        loop {
            let op = if self.eat('+') {
                Op::Add
            } else if self.eat('-') {
                Op::Sub
            } else {
                return Ok(lhs);
            };
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(self.product()?));
        }
    }

    fn product(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.unary()?;
        loop {
            let op = if self.eat('*') {
                Op::Mul
            } else if self.eat('/') {
                Op::Div
            } else {
                return Ok(lhs);
            };
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(self.unary()?));
        }
    }

    fn unary(&mut self) -> Result<Expr, SyntaxError> {
        if self.eat('-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr, SyntaxError> {
        let base = self.primary()?;
        if self.eat('^') {
            // the exponent may itself start with a minus: 2^-1
            let exp = self.unary()?;
            Ok(Expr::Bin(Op::Pow, Box::new(base), Box::new(exp)))
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> Result<Expr, SyntaxError> {
        let offset = self.offset();
        match self.peek().clone() {
            Tok::Num(v) => {
                self.pos += 1;
                Ok(Expr::Num(v))
            }
            Tok::Ident(name) => {
                self.pos += 1;
                if name == "x" {
                    return Ok(Expr::X);
                }
                let func = Func::from_name(&name).ok_or_else(|| SyntaxError {
                    offset,
                    message: format!("unknown identifier `{name}`"),
                })?;
                if !self.eat('(') {
                    return Err(self.error(&format!("`(` after `{name}`")));
                }
                let arg = self.sum()?;
                if !self.eat(')') {
                    return Err(self.error("`)`"));
                }
                Ok(Expr::Call(func, Box::new(arg)))
            }
            Tok::Sym('(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if !self.eat(')') {
                    return Err(self.error("`)`"));
                }
                Ok(inner)
            }
            _ => Err(self.error("a number, `x`, a function call, `(` or `-`")),
        }
    }
}

pub fn parse_expr(src: &str) -> Result<Expr, SyntaxError> {
    let mut p = Parser { toks: tokenize(src)?, pos: 0 };
    let e = p.sum()?;
    if *p.peek() != Tok::End {
        return Err(p.error("an operator or end of input"));
    }
    Ok(e)
}

impl Expr {
    pub fn eval(&self, x: f64) -> f64 {
        match self {
            Expr::Num(v) => *v,
            Expr::X => x,
            Expr::Neg(e) => -e.eval(x),
            Expr::Bin(op, a, b) => {
                let (a, b) = (a.eval(x), b.eval(x));
                match op {
                    Op::Add => a + b,
                    Op::Sub => a - b,
                    Op::Mul => a * b,
                    Op::Div => a / b,
                    Op::Pow if b == b.trunc() && b.abs() <= i32::MAX as f64 => a.powi(b as i32),
                    Op::Pow => a.powf(b),
                }
            }
            Expr::Call(f, e) => f.apply(e.eval(x)),
        }
    }

    fn depends_on_x(&self) -> bool {
        match self {
            Expr::Num(_) => false,
            Expr::X => true,
            Expr::Neg(e) | Expr::Call(_, e) => e.depends_on_x(),
            Expr::Bin(_, a, b) => a.depends_on_x() || b.depends_on_x(),
        }
    }

    /// Checks that the expression is built from polynomials, `exp`, `sin`
    /// and `cos`, so that it can be evaluated off the real line.
    pub fn check_entire(&self) -> Result<(), String> {
        match self {
            Expr::Num(_) | Expr::X => Ok(()),
            Expr::Neg(e) => e.check_entire(),
            Expr::Call(f, e) => match f {
                Func::Exp | Func::Sin | Func::Cos => e.check_entire(),
                other => Err(format!("`{}` is not allowed in a modifier", other.name())),
            },
            Expr::Bin(op, a, b) => {
                a.check_entire()?;
                b.check_entire()?;
                match op {
                    Op::Div if b.depends_on_x() => {
                        Err("a modifier may only divide by constants".to_string())
                    }
                    Op::Pow if b.depends_on_x() => {
                        if a.depends_on_x() || !(a.eval(0.0) > 0.0) {
                            Err("x in an exponent needs a positive constant base".to_string())
                        } else {
                            Ok(())
                        }
                    }
                    Op::Pow => {
                        let p = b.eval(0.0);
                        if a.depends_on_x() && !(p >= 0.0 && p == p.trunc()) {
                            Err(format!("power {p} of x is not a polynomial"))
                        } else {
                            Ok(())
                        }
                    }
                    _ => Ok(()),
                }
            }
        }
    }

    /// Complex evaluation; only meaningful after [`Expr::check_entire`].
    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        match self {
            Expr::Num(v) => Complex64::new(*v, 0.0),
            Expr::X => z,
            Expr::Neg(e) => -e.eval_complex(z),
            Expr::Bin(op, a, b) => {
                if *op == Op::Pow && !b.depends_on_x() {
                    let p = b.eval(0.0);
                    if p == p.trunc() && p.abs() <= i32::MAX as f64 {
                        return a.eval_complex(z).powi(p as i32);
                    }
                }
                let (a, b) = (a.eval_complex(z), b.eval_complex(z));
                match op {
                    Op::Add => a + b,
                    Op::Sub => a - b,
                    Op::Mul => a * b,
                    Op::Div => a / b,
                    // base is a positive constant here
                    Op::Pow => (b * a.re.ln()).exp(),
                }
            }
            Expr::Call(f, e) => {
                let v = e.eval_complex(z);
                match f {
                    Func::Sin => v.sin(),
                    Func::Cos => v.cos(),
                    Func::Tan => v.tan(),
                    Func::Exp => v.exp(),
                    Func::Log => v.ln(),
                    Func::Sqrt => v.sqrt(),
                    Func::Abs => Complex64::new(v.norm(), 0.0),
                }
            }
        }
    }
}

/// A parsed modifier `h(x)` for the modified Jacobi path.
pub struct EntireExpr(Expr);

impl EntireExpr {
    pub fn new(e: Expr) -> Result<Self, String> {
        e.check_entire()?;
        Ok(EntireExpr(e))
    }
}

impl fastgauss::Modifier for EntireExpr {
    fn eval(&self, x: f64) -> f64 {
        self.0.eval(x)
    }

    fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.0.eval_complex(z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(e: Expr) -> Box<Expr> {
        Box::new(e)
    }

    #[test]
    fn call_times_x() {
        let e = parse_expr("exp(-x)*x").unwrap();
        let want = Expr::Bin(
            Op::Mul,
            b(Expr::Call(Func::Exp, b(Expr::Neg(b(Expr::X))))),
            b(Expr::X),
        );
        assert_eq!(e, want);
    }

    #[test]
    fn power_is_right_associative() {
        let e = parse_expr("2^3^2").unwrap();
        assert_eq!(e.eval(0.0), 512.0);
        assert_eq!(e.eval(7.5), 512.0);
        assert_eq!(parse_expr("-2^2").unwrap().eval(0.0), -4.0);
        assert_eq!(parse_expr("2^-1").unwrap().eval(0.0), 0.5);
    }

    #[test]
    fn precedence() {
        let e = parse_expr("1 + 2*x^2 - 6/3").unwrap();
        assert_eq!(e.eval(3.0), 17.0);
        assert_eq!(parse_expr("(1+x)*2").unwrap().eval(1.0), 4.0);
        assert_eq!(parse_expr("1.5e2 + .5").unwrap().eval(0.0), 150.5);
    }

    #[test]
    fn open_call_fails_at_end() {
        let err = parse_expr("sin(").unwrap_err();
        assert_eq!(err.offset, 4);
        assert!(err.message.contains("expected"), "{err}");
    }

    #[test]
    fn error_offsets() {
        assert_eq!(parse_expr("x + foo(x)").unwrap_err().offset, 4);
        assert_eq!(parse_expr("x $ 2").unwrap_err().offset, 2);
        assert_eq!(parse_expr("(x + 1").unwrap_err().offset, 6);
        assert_eq!(parse_expr("x x").unwrap_err().offset, 2);
        assert_eq!(parse_expr("").unwrap_err().offset, 0);
        assert_eq!(parse_expr("sin x").unwrap_err().offset, 4);
    }

    #[test]
    fn offsets_are_bytes() {
        // "é" is two bytes
        assert_eq!(parse_expr("é").unwrap_err().offset, 0);
        assert_eq!(parse_expr("x+é").unwrap_err().offset, 2);
    }

    #[test]
    fn modifier_restrictions() {
        for ok in ["exp(x)", "x^3 + 2*x - 1", "sin(x)/2 + cos(x)^2", "2^x", "exp(-x^2)"] {
            assert!(parse_expr(ok).unwrap().check_entire().is_ok(), "{ok}");
        }
        for bad in ["log(x+3)", "sqrt(x+2)", "abs(x)", "tan(x)", "1/(x+3)", "x^0.5", "x^x"] {
            assert!(parse_expr(bad).unwrap().check_entire().is_err(), "{bad}");
        }
    }

    #[test]
    fn complex_agrees_on_the_real_line() {
        let e = parse_expr("exp(x)*sin(x) + x^3/4 - 2^x").unwrap();
        for x in [-0.9, 0.0, 0.3, 1.0] {
            let z = e.eval_complex(Complex64::new(x, 0.0));
            assert!((z.re - e.eval(x)).abs() < 1e-15 && z.im.abs() < 1e-15);
        }
        let z = Complex64::new(0.3, 0.7);
        let d = parse_expr("exp(x)").unwrap().eval_complex(z) - z.exp();
        assert!(d.norm() < 1e-15);
    }
}
