use super::{is_fo_name, is_set_name, Formula, LogicError, SetRef, Vocabulary};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LParen,
    RParen,
    Comma,
    Dot,
    Bang,
    Amp,
    Bar,
    Arrow,
    EqSign,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Bang => "`!`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Bar => "`|`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::EqSign => "`=`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, LogicError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            b'.' => Tok::Dot,
            b'!' => Tok::Bang,
            b'&' => Tok::Amp,
            b'|' => Tok::Bar,
            b'=' => Tok::EqSign,
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::Arrow
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i + 1 < bytes.len() && (bytes[i + 1].is_ascii_alphanumeric() || bytes[i + 1] == b'_') {
                    i += 1;
                }
                Tok::Ident(text[start..=i].to_string())
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(LogicError::Syntax { pos: start, msg: format!("unexpected character `{ch}`") });
            }
        };
        i += 1;
        out.push((tok, start));
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

enum Quant {
    Exists,
    Forall,
    ExistsSet(bool),
    ForallSet(bool),
}

fn quantifier_keyword(s: &str) -> Option<Quant> {
    Some(match s {
        "E" => Quant::Exists,
        "A" => Quant::Forall,
        "E2" => Quant::ExistsSet(false),
        "A2" => Quant::ForallSet(false),
        "Ew" => Quant::ExistsSet(true),
        "Aw" => Quant::ForallSet(true),
        _ => return None,
    })
}

struct Parser<'v> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    voc: &'v Vocabulary,
    set_scope: Vec<String>,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.at + k).min(self.toks.len() - 1)].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, msg: String) -> Result<T, LogicError> {
        Err(LogicError::Syntax { pos: self.pos(), msg })
    }

    fn expect(&mut self, want: Tok) -> Result<(), LogicError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            self.fail(format!("expected {}, found {}", want.describe(), self.peek().describe()))
        }
    }

    fn fo_var(&mut self) -> Result<String, LogicError> {
        match self.peek().clone() {
            Tok::Ident(s) if is_fo_name(&s) => {
                self.bump();
                Ok(s)
            }
            other => self.fail(format!("expected a first-order variable, found {}", other.describe())),
        }
    }

    fn formula(&mut self) -> Result<Formula, LogicError> {
        let lhs = self.disj()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.formula()?;
            return Ok(lhs.implies(rhs));
        }
        Ok(lhs)
    }

    fn disj(&mut self) -> Result<Formula, LogicError> {
        let mut acc = self.conj()?;
        while *self.peek() == Tok::Bar {
            self.bump();
            acc = acc.or(self.conj()?);
        }
        Ok(acc)
    }

    fn conj(&mut self) -> Result<Formula, LogicError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            acc = acc.and(self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula, LogicError> {
        match self.peek().clone() {
            Tok::Bang => {
                self.bump();
                Ok(self.unary()?.not())
            }
            Tok::LParen => {
                self.bump();
                let f = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            Tok::Ident(word) => match (quantifier_keyword(&word), self.peek_at(1)) {
                (Some(q), Tok::Ident(_)) => {
                    self.bump();
                    self.quantified(q)
                }
                _ => self.atom(),
            },
            other => self.fail(format!("expected a formula, found {}", other.describe())),
        }
    }

    fn quantified(&mut self, q: Quant) -> Result<Formula, LogicError> {
        let pos = self.pos();
        let Tok::Ident(var) = self.bump() else { unreachable!("checked by caller") };
        match q {
            Quant::Exists | Quant::Forall => {
                if !is_fo_name(&var) {
                    return Err(LogicError::Syntax {
                        pos,
                        msg: format!("first-order variable `{var}` must start lowercase"),
                    });
                }
                self.expect(Tok::Dot)?;
                let body = self.formula()?;
                Ok(match q {
                    Quant::Exists => Formula::exists(&var, body),
                    _ => Formula::forall(&var, body),
                })
            }
            Quant::ExistsSet(weak) | Quant::ForallSet(weak) => {
                if !is_set_name(&var) {
                    return Err(LogicError::Syntax { pos, msg: format!("set variable `{var}` must start uppercase") });
                }
                if self.voc.mentions(&var) {
                    return Err(LogicError::Syntax {
                        pos,
                        msg: format!("set variable `{var}` clashes with a vocabulary symbol"),
                    });
                }
                self.expect(Tok::Dot)?;
                self.set_scope.push(var.clone());
                let body = self.formula();
                self.set_scope.pop();
                let body = body?;
                Ok(match q {
                    Quant::ExistsSet(_) => Formula::exists_set(&var, weak, body),
                    _ => Formula::forall_set(&var, weak, body),
                })
            }
        }
    }

    fn atom(&mut self) -> Result<Formula, LogicError> {
        let pos = self.pos();
        let Tok::Ident(name) = self.bump() else { unreachable!("checked by caller") };
        match self.peek() {
            Tok::EqSign => {
                if !is_fo_name(&name) {
                    return Err(LogicError::Syntax { pos, msg: format!("`{name}` is not a first-order variable") });
                }
                self.bump();
                let rhs = self.fo_var()?;
                Ok(Formula::Eq(name, rhs))
            }
            Tok::LParen => {
                self.bump();
                let mut args = vec![self.fo_var()?];
                while *self.peek() == Tok::Comma {
                    self.bump();
                    args.push(self.fo_var()?);
                }
                self.expect(Tok::RParen)?;
                let arity_err = |expected| LogicError::Arity { pos, name: name.clone(), expected, found: args.len() };
                if let Some(arity) = self.voc.arity(&name) {
                    if arity != args.len() {
                        return Err(arity_err(arity));
                    }
                    return Ok(Formula::Rel(name, args));
                }
                let target = if self.set_scope.contains(&name) {
                    SetRef::Var(name.clone())
                } else if self.voc.has_set(&name) {
                    SetRef::Symbol(name.clone())
                } else {
                    return Err(LogicError::UnknownSymbol { pos, name });
                };
                if args.len() != 1 {
                    return Err(arity_err(1));
                }
                Ok(Formula::Member(target, args.pop().expect("one argument")))
            }
            other => self.fail(format!("expected `(` or `=` after `{name}`, found {}", other.describe())),
        }
    }
}

/// Parses a formula over `voc`. Membership atoms resolve to bound set variables
/// first and to the vocabulary's predicate symbols otherwise.
pub fn parse_formula(text: &str, voc: &Vocabulary) -> Result<Formula, LogicError> {
    parse_formula_with_sets(text, voc, &[])
}

/// Like [`parse_formula`], treating `free_sets` as free set variables in scope.
pub fn parse_formula_with_sets(text: &str, voc: &Vocabulary, free_sets: &[&str]) -> Result<Formula, LogicError> {
    let mut p = Parser { toks: lex(text)?, at: 0, voc, set_scope: free_sets.iter().map(|s| s.to_string()).collect() };
    let f = p.formula()?;
    if *p.peek() != Tok::End {
        return p.fail(format!("unexpected {} after formula", p.peek().describe()));
    }
    Ok(f)
}
