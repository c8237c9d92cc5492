use num_bigint::BigInt;

use super::{Constant, ContractedOp, FormExpr, InfixOp, UnaryOp};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::structure::Sign;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Slash,
    Plus,
    Minus,
    Infix(InfixOp),
    LParen,
    RParen,
    Comma,
    Ident(String),
    Blade(Vec<u32>),
    Frame(u32),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(i) => format!("integer {i}"),
            Tok::Slash => "'/'".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Infix(op) => format!("'{}'", op.symbol()),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::Blade(_) => "blade literal".into(),
            Tok::Frame(k) => format!("frame vector E{k}"),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Pos {
    line: usize,
    column: usize,
}

fn syntax(pos: Pos, message: impl Into<String>) -> Error {
    Error::Syntax {
        line: pos.line,
        column: pos.column,
        message: message.into(),
    }
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            chars: src.char_indices().peekable(),
            line: 1,
            column: 1,
        }
    }

    fn pos(&self) -> Pos {
        Pos {
            line: self.line,
            column: self.column,
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().map(|&(_, c)| c)
    }

    fn bump(&mut self) -> Option<char> {
        let (_, c) = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.bump();
        }
        s
    }

    fn small_int(&mut self, pos: Pos) -> Result<u32> {
        let d = self.digits();
        if d.is_empty() {
            return Err(syntax(pos, "expected an index"));
        }
        d.parse()
            .map_err(|_| syntax(pos, format!("index {d} too large")))
    }

    fn tokens(mut self) -> Result<Vec<(Tok, Pos)>> {
        let mut out = Vec::new();
        loop {
            while self.peek().is_some_and(char::is_whitespace) {
                self.bump();
            }
            let pos = self.pos();
            let Some(c) = self.peek() else {
                out.push((Tok::Eof, pos));
                return Ok(out);
            };
            let tok = match c {
                '0'..='9' => {
                    let d = self.digits();
                    Tok::Int(d.parse().expect("digits"))
                }
                '+' | '-' | '(' | ')' | ',' | '^' => {
                    self.bump();
                    match c {
                        '+' => Tok::Plus,
                        '-' => Tok::Minus,
                        '(' => Tok::LParen,
                        ')' => Tok::RParen,
                        ',' => Tok::Comma,
                        _ => Tok::Infix(InfixOp::Wedge),
                    }
                }
                '<' => {
                    self.bump();
                    if self.bump() != Some('>') {
                        return Err(syntax(pos, "expected '<>'"));
                    }
                    Tok::Infix(InfixOp::Graf)
                }
                '/' => {
                    self.bump();
                    if self.peek() == Some('\\') {
                        self.bump();
                        Tok::Infix(InfixOp::Triangle)
                    } else {
                        Tok::Slash
                    }
                }
                '_' => {
                    self.bump();
                    if self.bump() != Some('|') {
                        return Err(syntax(pos, "expected '_|'"));
                    }
                    Tok::Infix(InfixOp::Contract)
                }
                c if c.is_ascii_alphabetic() => self.word(pos)?,
                other => return Err(syntax(pos, format!("unexpected character {other:?}"))),
            };
            out.push((tok, pos));
        }
    }

    fn word(&mut self, pos: Pos) -> Result<Tok> {
        let first = self.bump().expect("peeked");
        if first == 'e' && self.peek() == Some('{') {
            self.bump();
            let mut idx = Vec::new();
            loop {
                while self.peek().is_some_and(char::is_whitespace) {
                    self.bump();
                }
                let at = self.pos();
                idx.push(self.small_int(at)?);
                while self.peek().is_some_and(char::is_whitespace) {
                    self.bump();
                }
                match self.bump() {
                    Some(',') => continue,
                    Some('}') => break,
                    _ => return Err(syntax(self.pos(), "expected ',' or '}' in blade literal")),
                }
            }
            return Ok(Tok::Blade(idx));
        }
        let mut word = String::from(first);
        while let Some(c) = self.peek().filter(char::is_ascii_alphanumeric) {
            word.push(c);
            self.bump();
        }
        let rest = &word[1..];
        let all_digits = !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit());
        Ok(match first {
            'e' if all_digits => Tok::Blade(rest.bytes().map(|b| u32::from(b - b'0')).collect()),
            'E' if all_digits => Tok::Frame(
                rest.parse()
                    .map_err(|_| syntax(pos, format!("frame index {rest} too large")))?,
            ),
            _ => Tok::Ident(word),
        })
    }
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn next(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        let (tok, pos) = self.next();
        if tok == want {
            Ok(())
        } else {
            Err(syntax(
                pos,
                format!("expected {}, found {}", want.describe(), tok.describe()),
            ))
        }
    }

    fn sum(&mut self) -> Result<FormExpr> {
        let mut left = self.prod()?;
        loop {
            let add = match self.peek() {
                Tok::Plus => true,
                Tok::Minus => false,
                _ => return Ok(left),
            };
            self.next();
            let right = Box::new(self.prod()?);
            left = if add {
                FormExpr::Add(Box::new(left), right)
            } else {
                FormExpr::Sub(Box::new(left), right)
            };
        }
    }

    fn prod(&mut self) -> Result<FormExpr> {
        let first_pos = self.pos();
        let mut left = self.unary()?;
        if matches!(left, FormExpr::Frame(_)) && *self.peek() != Tok::Infix(InfixOp::Contract) {
            return Err(syntax(
                first_pos,
                "a frame vector may only appear left of '_|'",
            ));
        }
        let mut chain: Option<InfixOp> = None;
        while let Tok::Infix(op) = *self.peek() {
            let op_pos = self.pos();
            if let Some(prev) = chain.filter(|prev| *prev != op) {
                return Err(syntax(
                    op_pos,
                    format!(
                        "mixing '{}' and '{}' needs parentheses",
                        prev.symbol(),
                        op.symbol()
                    ),
                ));
            }
            if op == InfixOp::Contract && !matches!(left, FormExpr::Frame(_)) {
                return Err(syntax(
                    op_pos,
                    "left operand of '_|' must be a frame vector E<k>",
                ));
            }
            chain = Some(op);
            self.next();
            let rhs_pos = self.pos();
            let right = self.unary()?;
            if matches!(right, FormExpr::Frame(_)) {
                return Err(syntax(
                    rhs_pos,
                    "a frame vector may only appear left of '_|'",
                ));
            }
            left = FormExpr::Product(op, Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<FormExpr> {
        let (tok, pos) = self.next();
        match tok {
            Tok::Int(num) => {
                let den = if *self.peek() == Tok::Slash {
                    self.next();
                    match self.next() {
                        (Tok::Int(d), dpos) => {
                            if d == BigInt::from(0) {
                                return Err(syntax(dpos, "zero denominator"));
                            }
                            d
                        }
                        (other, p) => {
                            return Err(syntax(
                                p,
                                format!("expected denominator, found {}", other.describe()),
                            ))
                        }
                    }
                } else {
                    BigInt::from(1)
                };
                Ok(FormExpr::Scalar(Rational::new(num, den)))
            }
            Tok::Blade(idx) => Ok(FormExpr::Blade(idx)),
            Tok::Frame(k) => Ok(FormExpr::Frame(k)),
            Tok::LParen => {
                let inner = self.sum()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Tok::Ident(name) => self.named(name, pos),
            other => Err(syntax(pos, format!("unexpected {}", other.describe()))),
        }
    }

    fn named(&mut self, name: String, pos: Pos) -> Result<FormExpr> {
        let constant = match name.as_str() {
            "one" => Some(Constant::One),
            "vol" => Some(Constant::Vol),
            "pplus" => Some(Constant::PPlus),
            "pminus" => Some(Constant::PMinus),
            _ => None,
        };
        if let Some(c) = constant {
            return Ok(FormExpr::Const(c));
        }
        if let Some(op) = UnaryOp::ALL.iter().find(|op| op.name() == name) {
            self.expect(Tok::LParen)?;
            let arg = self.sum()?;
            self.expect(Tok::RParen)?;
            return Ok(FormExpr::Unary(*op, Box::new(arg)));
        }
        match name.as_str() {
            "tgp" | "tgm" => {
                let sign = if name == "tgp" {
                    Sign::Plus
                } else {
                    Sign::Minus
                };
                self.expect(Tok::LParen)?;
                let a = self.sum()?;
                self.expect(Tok::Comma)?;
                let b = self.sum()?;
                self.expect(Tok::RParen)?;
                Ok(FormExpr::Truncated(sign, Box::new(a), Box::new(b)))
            }
            "cw" | "cg" => {
                let op = if name == "cw" {
                    ContractedOp::Wedge
                } else {
                    ContractedOp::Graf
                };
                self.expect(Tok::LParen)?;
                let order = match self.next() {
                    (Tok::Int(l), p) => {
                        u32::try_from(l).map_err(|_| syntax(p, "contraction order too large"))?
                    }
                    (other, p) => {
                        return Err(syntax(
                            p,
                            format!("expected integer order, found {}", other.describe()),
                        ))
                    }
                };
                self.expect(Tok::Comma)?;
                let a = self.sum()?;
                self.expect(Tok::Comma)?;
                let b = self.sum()?;
                self.expect(Tok::RParen)?;
                Ok(FormExpr::Contracted(op, order, Box::new(a), Box::new(b)))
            }
            _ => Err(syntax(pos, format!("unknown name {name:?}"))),
        }
    }
}

pub fn parse(src: &str) -> Result<FormExpr> {
    let toks = Lexer::new(src).tokens()?;
    let mut p = Parser { toks, at: 0 };
    let e = p.sum()?;
    match p.next() {
        (Tok::Eof, _) => Ok(e),
        (tok, pos) => Err(syntax(pos, format!("unexpected {}", tok.describe()))),
    }
}
