//! Propositional formulas over atoms with classical connectives, the unary
//! strong negation `N` and the world constant `@1`.
//!
//! Text grammar, loosest binding first:
//!
//! ```text
//! iff   := imp ( "<->" iff )?
//! imp   := or ( "->" imp )?
//! or    := and ( "|" and )*
//! and   := unary ( "&" unary )*
//! unary := "~" unary | "N" unary | primary
//! primary := "T" | "F" | "@1" | IDENT | "(" iff ")"
//! ```
//!
//! `N` must be separated from its operand by whitespace or a parenthesis:
//! `Nx` is the atom named `Nx`.

use std::fmt;

use indexmap::IndexSet;

use crate::error::{Error, Result};
use crate::state::{CnModel, State};

const RESERVED: [&str; 3] = ["T", "F", "N"];

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Top,
    Bottom,
    World1,
    Atom(String),
    Not(Box<Formula>),
    N(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

/// Returns true if `name` can be used as an atom: `[A-Za-z][A-Za-z0-9_]*`
/// and not one of the reserved words `T`, `F`, `N`.
pub fn is_valid_name(name: &str) -> bool {
    check_name(name).is_ok()
}

pub fn check_name(name: &str) -> Result<()> {
    if RESERVED.contains(&name) {
        return Err(Error::ReservedName(name.to_string()));
    }
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return Err(Error::InvalidName(name.to_string())),
    }
    if chars.all(|c| c.is_ascii_alphanumeric() || c == '_') {
        Ok(())
    } else {
        Err(Error::InvalidName(name.to_string()))
    }
}

impl Formula {
    /// Builds an atom without checking the name; see [`Formula::try_atom`].
    pub fn atom(name: impl Into<String>) -> Formula {
        Formula::Atom(name.into())
    }

    pub fn try_atom(name: impl Into<String>) -> Result<Formula> {
        let name = name.into();
        check_name(&name)?;
        Ok(Formula::Atom(name))
    }

    /// `N q` for an atom `q`.
    pub fn n_atom(name: impl Into<String>) -> Formula {
        Formula::atom(name).n()
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Formula {
        Formula::Not(Box::new(self))
    }

    pub fn n(self) -> Formula {
        Formula::N(Box::new(self))
    }

    pub fn and(self, rhs: Formula) -> Formula {
        Formula::And(Box::new(self), Box::new(rhs))
    }

    pub fn or(self, rhs: Formula) -> Formula {
        Formula::Or(Box::new(self), Box::new(rhs))
    }

    pub fn imp(self, rhs: Formula) -> Formula {
        Formula::Imp(Box::new(self), Box::new(rhs))
    }

    pub fn iff(self, rhs: Formula) -> Formula {
        Formula::Iff(Box::new(self), Box::new(rhs))
    }

    /// Left-nested conjunction. The empty conjunction is `T`, a single
    /// conjunct is returned as is.
    pub fn conj<I: IntoIterator<Item = Formula>>(items: I) -> Formula {
        items
            .into_iter()
            .reduce(Formula::and)
            .unwrap_or(Formula::Top)
    }

    /// Left-nested disjunction. The empty disjunction is `F`.
    pub fn disj<I: IntoIterator<Item = Formula>>(items: I) -> Formula {
        items
            .into_iter()
            .reduce(Formula::or)
            .unwrap_or(Formula::Bottom)
    }

    /// `~q & ~N q`: the object-level "undecided" for an atom.
    pub fn undecided(name: &str) -> Formula {
        Formula::atom(name).not().and(Formula::n_atom(name).not())
    }

    /// Atom names in order of first occurrence.
    pub fn atoms(&self) -> IndexSet<String> {
        let mut out = IndexSet::new();
        self.collect_atoms(&mut out);
        out
    }

    pub(crate) fn collect_atoms(&self, out: &mut IndexSet<String>) {
        match self {
            Formula::Top | Formula::Bottom | Formula::World1 => {}
            Formula::Atom(name) => {
                if !out.contains(name) {
                    out.insert(name.clone());
                }
            }
            Formula::Not(a) | Formula::N(a) => a.collect_atoms(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// Every `N` node has an atom as its child.
    pub fn is_cn_flat(&self) -> bool {
        match self {
            Formula::Top | Formula::Bottom | Formula::World1 | Formula::Atom(_) => true,
            Formula::N(a) => matches!(**a, Formula::Atom(_)),
            Formula::Not(a) => a.is_cn_flat(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                a.is_cn_flat() && b.is_cn_flat()
            }
        }
    }

    pub fn contains_world1(&self) -> bool {
        match self {
            Formula::World1 => true,
            Formula::Top | Formula::Bottom | Formula::Atom(_) => false,
            Formula::Not(a) | Formula::N(a) => a.contains_world1(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                a.contains_world1() || b.contains_world1()
            }
        }
    }

    pub fn contains_n(&self) -> bool {
        match self {
            Formula::N(_) => true,
            Formula::Top | Formula::Bottom | Formula::World1 | Formula::Atom(_) => false,
            Formula::Not(a) => a.contains_n(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                a.contains_n() || b.contains_n()
            }
        }
    }

    /// Classical evaluation against a CN model: `q` is true iff `q` is in,
    /// `N q` is true iff `q` is out.
    pub fn evaluate_cn(&self, model: &CnModel) -> Result<bool> {
        if !self.is_cn_flat() {
            return Err(Error::NotCnFlat(self.to_string()));
        }
        self.eval_cn(model)
    }

    fn eval_cn(&self, model: &CnModel) -> Result<bool> {
        let state = |name: &str| {
            model
                .get(name)
                .ok_or_else(|| Error::UnknownAtom(name.to_string()))
        };
        Ok(match self {
            Formula::Top => true,
            Formula::Bottom => false,
            Formula::World1 => return Err(Error::WorldConstant),
            Formula::Atom(q) => state(q)? == State::In,
            Formula::N(a) => match &**a {
                Formula::Atom(q) => state(q)? == State::Out,
                _ => return Err(Error::NotCnFlat(self.to_string())),
            },
            Formula::Not(a) => !a.eval_cn(model)?,
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                // both sides are evaluated so unknown atoms never go unnoticed
                let (l, r) = (a.eval_cn(model)?, b.eval_cn(model)?);
                match self {
                    Formula::And(..) => l && r,
                    Formula::Or(..) => l || r,
                    Formula::Imp(..) => !l || r,
                    _ => l == r,
                }
            }
        })
    }

    /// Pushes every `N` down to the atoms.
    ///
    /// Rewrites: `NN A => A`, `N(A & B) => NA | NB`, `N(A | B) => NA & NB`,
    /// `N~A => ~NA`, `N(A -> B) => ~NA & NB`, `NT => F`, `NF => T`,
    /// `N@1 => @1`. A biconditional under `N` is first expanded into two
    /// implications. The result is CN-flat and agrees with the input at
    /// both worlds of every two-world model.
    pub fn normalize_n(&self) -> Formula {
        match self {
            Formula::Top | Formula::Bottom | Formula::World1 | Formula::Atom(_) => self.clone(),
            Formula::N(a) => a.push_n(),
            Formula::Not(a) => a.normalize_n().not(),
            Formula::And(a, b) => a.normalize_n().and(b.normalize_n()),
            Formula::Or(a, b) => a.normalize_n().or(b.normalize_n()),
            Formula::Imp(a, b) => a.normalize_n().imp(b.normalize_n()),
            Formula::Iff(a, b) => a.normalize_n().iff(b.normalize_n()),
        }
    }

    /// Normal form of `N self`.
    fn push_n(&self) -> Formula {
        match self {
            Formula::Atom(_) => self.clone().n(),
            Formula::Top => Formula::Bottom,
            Formula::Bottom => Formula::Top,
            Formula::World1 => Formula::World1,
            Formula::N(a) => a.normalize_n(),
            Formula::Not(a) => a.push_n().not(),
            Formula::And(a, b) => a.push_n().or(b.push_n()),
            Formula::Or(a, b) => a.push_n().and(b.push_n()),
            Formula::Imp(a, b) => a.push_n().not().and(b.push_n()),
            Formula::Iff(a, b) => {
                let forward = (**a).clone().imp((**b).clone());
                let backward = (**b).clone().imp((**a).clone());
                forward.and(backward).push_n()
            }
        }
    }
}

/// Parses a formula; see the module docs for the grammar.
pub fn parse_formula(text: &str) -> Result<Formula> {
    let tokens = lex(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.len(),
    };
    let f = parser.iff()?;
    match parser.peek() {
        None => Ok(f),
        Some((tok, offset)) => Err(Error::Syntax {
            offset,
            message: format!("unexpected {}", tok.describe()),
        }),
    }
}

impl std::str::FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Formula> {
        parse_formula(s)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Top => write!(f, "T"),
            Formula::Bottom => write!(f, "F"),
            Formula::World1 => write!(f, "@1"),
            Formula::Atom(name) => write!(f, "{name}"),
            Formula::Not(a) => write!(f, "~{a}"),
            Formula::N(a) => write!(f, "N {a}"),
            Formula::And(a, b) => write!(f, "({a} & {b})"),
            Formula::Or(a, b) => write!(f, "({a} | {b})"),
            Formula::Imp(a, b) => write!(f, "({a} -> {b})"),
            Formula::Iff(a, b) => write!(f, "({a} <-> {b})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    LParen,
    RParen,
    Tilde,
    Amp,
    Bar,
    Arrow,
    DoubleArrow,
    Top,
    Bottom,
    World1,
    NOp,
    Ident(String),
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::Tilde => "`~`".into(),
            Token::Amp => "`&`".into(),
            Token::Bar => "`|`".into(),
            Token::Arrow => "`->`".into(),
            Token::DoubleArrow => "`<->`".into(),
            Token::Top => "`T`".into(),
            Token::Bottom => "`F`".into(),
            Token::World1 => "`@1`".into(),
            Token::NOp => "`N`".into(),
            Token::Ident(name) => format!("atom `{name}`"),
        }
    }

    fn starts_operand(&self) -> bool {
        matches!(
            self,
            Token::LParen
                | Token::Tilde
                | Token::Top
                | Token::Bottom
                | Token::World1
                | Token::NOp
                | Token::Ident(_)
        )
    }
}

fn lex(text: &str) -> Result<Vec<(Token, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'(' => {
                i += 1;
                Token::LParen
            }
            b')' => {
                i += 1;
                Token::RParen
            }
            b'~' => {
                i += 1;
                Token::Tilde
            }
            b'&' => {
                i += 1;
                Token::Amp
            }
            b'|' => {
                i += 1;
                Token::Bar
            }
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 2;
                Token::Arrow
            }
            b'<' if bytes.get(i + 1) == Some(&b'-') && bytes.get(i + 2) == Some(&b'>') => {
                i += 3;
                Token::DoubleArrow
            }
            b'@' if bytes.get(i + 1) == Some(&b'1') => {
                i += 2;
                Token::World1
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                match &text[start..i] {
                    "T" => Token::Top,
                    "F" => Token::Bottom,
                    "N" => Token::NOp,
                    name => Token::Ident(name.to_string()),
                }
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(Error::Syntax {
                    offset: start,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        };
        out.push((tok, start));
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<(Token, usize)> {
        self.tokens.get(self.pos).cloned()
    }

    fn eat(&mut self, tok: &Token) -> bool {
        if self.tokens.get(self.pos).map(|(t, _)| t) == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(_, o)| *o)
    }

    fn iff(&mut self) -> Result<Formula> {
        let lhs = self.imp()?;
        if self.eat(&Token::DoubleArrow) {
            let rhs = self.iff()?;
            return Ok(lhs.iff(rhs));
        }
        Ok(lhs)
    }

    fn imp(&mut self) -> Result<Formula> {
        let lhs = self.or()?;
        if self.eat(&Token::Arrow) {
            let rhs = self.imp()?;
            return Ok(lhs.imp(rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula> {
        let mut lhs = self.and()?;
        while self.eat(&Token::Bar) {
            lhs = lhs.or(self.and()?);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula> {
        let mut lhs = self.unary()?;
        while self.eat(&Token::Amp) {
            lhs = lhs.and(self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula> {
        if self.eat(&Token::Tilde) {
            return Ok(self.unary()?.not());
        }
        if let Some((Token::NOp, offset)) = self.peek() {
            self.pos += 1;
            // `N` used where an operand is expected to end: someone meant an atom.
            let operand_follows = self
                .tokens
                .get(self.pos)
                .is_some_and(|(t, _)| t.starts_operand());
            if !operand_follows {
                let _ = offset;
                return Err(Error::ReservedName("N".into()));
            }
            return Ok(self.unary()?.n());
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Formula> {
        let offset = self.offset();
        let Some((tok, _)) = self.peek() else {
            return Err(Error::Syntax {
                offset,
                message: "unexpected end of input".into(),
            });
        };
        self.pos += 1;
        match tok {
            Token::Top => Ok(Formula::Top),
            Token::Bottom => Ok(Formula::Bottom),
            Token::World1 => Ok(Formula::World1),
            Token::Ident(name) => Ok(Formula::Atom(name)),
            Token::LParen => {
                let inner = self.iff()?;
                if !self.eat(&Token::RParen) {
                    return Err(Error::Syntax {
                        offset: self.offset(),
                        message: "expected `)`".into(),
                    });
                }
                Ok(inner)
            }
            other => Err(Error::Syntax {
                offset,
                message: format!("unexpected {}", other.describe()),
            }),
        }
    }
}
