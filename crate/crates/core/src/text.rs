//! Tokenizer and recursive-descent parser shared by the word syntax
//! (`x^3*y`, `(x*y)^2`, `x^-1`) and the group-ring element syntax
//! (`1 + x + 2*x^3*y`, `[z+1]*x`).

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Int(i64),
    Caret,
    Star,
    Plus,
    Minus,
    LParen,
    RParen,
    /// Raw contents of a `[...]` field literal.
    Bracket(String),
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '(' => {
                out.push(Token::LParen);
                i += 1;
            }
            ')' => {
                out.push(Token::RParen);
                i += 1;
            }
            '[' => {
                let close = chars[i..]
                    .iter()
                    .position(|&c| c == ']')
                    .ok_or_else(|| Error::parse(format!("unclosed '[' in {s:?}")))?;
                out.push(Token::Bracket(chars[i + 1..i + close].iter().collect()));
                i += close + 1;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let n = digits
                    .parse::<i64>()
                    .map_err(|_| Error::parse(format!("integer too large: {digits}")))?;
                out.push(Token::Int(n));
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
            }
            _ => return Err(Error::parse(format!("unexpected character {c:?} in {s:?}"))),
        }
    }
    Ok(out)
}

/// A parsed word before generator names are resolved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum WordExpr {
    Identity,
    Gen(String),
    Product(Vec<WordExpr>),
    Power(Box<WordExpr>, i64),
}

/// One multiplicative factor of a term in an element expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum TermFactor {
    Int(i64),
    Field(String),
    Word(WordExpr),
}

/// A signed product of factors; `negative` flips the coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Term {
    pub negative: bool,
    pub factors: Vec<TermFactor>,
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn new(s: &str) -> Result<Self> {
        Ok(Parser { tokens: tokenize(s)?, pos: 0 })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    fn expect_end(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(Error::parse(format!("unexpected token {t:?}"))),
        }
    }

    fn exponent(&mut self) -> Result<Option<i64>> {
        if self.peek() != Some(&Token::Caret) {
            return Ok(None);
        }
        self.pos += 1;
        let negative = if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        match self.next() {
            Some(Token::Int(n)) => Ok(Some(if negative { -n } else { n })),
            t => Err(Error::parse(format!("expected exponent, found {t:?}"))),
        }
    }

    fn word_atom(&mut self) -> Result<WordExpr> {
        let atom = match self.next() {
            Some(Token::Ident(name)) => WordExpr::Gen(name),
            Some(Token::Int(1)) => WordExpr::Identity,
            Some(Token::LParen) => {
                let inner = self.word()?;
                match self.next() {
                    Some(Token::RParen) => inner,
                    t => return Err(Error::parse(format!("expected ')', found {t:?}"))),
                }
            }
            t => return Err(Error::parse(format!("expected a word, found {t:?}"))),
        };
        Ok(match self.exponent()? {
            Some(e) => WordExpr::Power(Box::new(atom), e),
            None => atom,
        })
    }

    fn starts_word_atom(&self) -> bool {
        matches!(self.peek(), Some(Token::Ident(_)) | Some(Token::LParen) | Some(Token::Int(1)))
    }

    fn word(&mut self) -> Result<WordExpr> {
        let mut factors = vec![self.word_atom()?];
        loop {
            if self.peek() == Some(&Token::Star) {
                self.pos += 1;
                factors.push(self.word_atom()?);
            } else if self.starts_word_atom() {
                factors.push(self.word_atom()?);
            } else {
                break;
            }
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            WordExpr::Product(factors)
        })
    }

    fn term_factor(&mut self) -> Result<TermFactor> {
        match self.peek() {
            Some(Token::Int(n)) => {
                let n = *n;
                self.pos += 1;
                if self.exponent()?.is_some() {
                    return Err(Error::parse("exponents on scalars are not supported"));
                }
                Ok(TermFactor::Int(n))
            }
            Some(Token::Bracket(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(TermFactor::Field(s))
            }
            _ => Ok(TermFactor::Word(self.word_atom()?)),
        }
    }

    fn term(&mut self, negative: bool) -> Result<Term> {
        let mut factors = vec![self.term_factor()?];
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    factors.push(self.term_factor()?);
                }
                Some(Token::Ident(_)) | Some(Token::LParen) | Some(Token::Bracket(_)) => {
                    factors.push(self.term_factor()?)
                }
                _ => break,
            }
        }
        Ok(Term { negative, factors })
    }

    fn sum(&mut self) -> Result<Vec<Term>> {
        let mut terms = Vec::new();
        let mut negative = false;
        if let Some(Token::Plus | Token::Minus) = self.peek() {
            negative = self.next() == Some(Token::Minus);
        }
        terms.push(self.term(negative)?);
        while !self.at_end() {
            let negative = match self.next() {
                Some(Token::Plus) => false,
                Some(Token::Minus) => true,
                t => return Err(Error::parse(format!("expected '+' or '-', found {t:?}"))),
            };
            terms.push(self.term(negative)?);
        }
        Ok(terms)
    }
}

pub(crate) fn parse_word(s: &str) -> Result<WordExpr> {
    let mut p = Parser::new(s)?;
    if p.at_end() {
        return Err(Error::parse("empty word"));
    }
    let w = p.word()?;
    p.expect_end()?;
    Ok(w)
}

pub(crate) fn parse_sum(s: &str) -> Result<Vec<Term>> {
    let mut p = Parser::new(s)?;
    if p.at_end() {
        return Err(Error::parse("empty expression"));
    }
    p.sum()
}
