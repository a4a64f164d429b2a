//! OpenQASM 2.0 subset reader and writer.
//!
//! Accepted: the `OPENQASM 2.0;` header, `include` lines, one `qreg`, `//`
//! comments and the gates `h s sdg x y z t tdg cx cz ccx ccz swap` applied to
//! indexed qubits. `ccx`/`ccz` expand to the 7-T Toffoli network and `swap`
//! to three CX gates.

use std::fmt::{self, Write as _};

use thiserror::Error;

use super::{Circuit, Gate, GateKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("unsupported gate `{0}`")]
    UnsupportedGate(String),
    #[error("unsupported statement `{0}`")]
    UnsupportedStatement(String),
    #[error("more than one register declared")]
    MultipleRegisters,
    #[error("no quantum register declared before first gate")]
    MissingRegister,
    #[error("unknown register `{0}`")]
    UnknownRegister(String),
    #[error("qubit index {index} out of range for register of size {size}")]
    QubitOutOfRange { index: usize, size: usize },
    #[error("gate `{0}` applied to a repeated qubit")]
    RepeatedQubit(String),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(usize),
    Real(String),
    Str(String),
    Sym(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(i) => write!(f, "`{i}`"),
            Tok::Real(r) => write!(f, "`{r}`"),
            Tok::Str(s) => write!(f, "\"{s}\""),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, col);
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '/' && chars.get(i + 1) == Some(&'/') {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let mut real = false;
            if i < chars.len() && chars[i] == '.' {
                real = true;
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
            }
            let s: String = chars[start..i].iter().collect();
            if real {
                Tok::Real(s)
            } else {
                let v = s.parse().map_err(|_| ParseError {
                    line: tl,
                    column: tc,
                    kind: ParseErrorKind::Syntax(format!("integer `{s}` too large")),
                })?;
                Tok::Int(v)
            }
        } else if c == '"' {
            i += 1;
            while i < chars.len() && chars[i] != '"' && chars[i] != '\n' {
                i += 1;
            }
            if i >= chars.len() || chars[i] != '"' {
                return Err(ParseError {
                    line: tl,
                    column: tc,
                    kind: ParseErrorKind::Syntax("unterminated string".into()),
                });
            }
            i += 1;
            Tok::Str(chars[start + 1..i - 1].iter().collect())
        } else if "[](),;+-*/^".contains(c) {
            i += 1;
            Tok::Sym(c)
        } else {
            return Err(ParseError {
                line: tl,
                column: tc,
                kind: ParseErrorKind::Syntax(format!("unexpected character `{c}`")),
            });
        };
        col += i - start;
        out.push(Spanned {
            tok,
            line: tl,
            column: tc,
        });
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column: col,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    reg: Option<(String, usize)>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn err_here(&self, kind: ParseErrorKind) -> ParseError {
        let t = &self.toks[self.pos];
        ParseError {
            line: t.line,
            column: t.column,
            kind,
        }
    }

    fn err_at(&self, pos: usize, kind: ParseErrorKind) -> ParseError {
        let t = &self.toks[pos];
        ParseError {
            line: t.line,
            column: t.column,
            kind,
        }
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        match self.peek() {
            Tok::Sym(s) if *s == c => {
                self.bump();
                Ok(())
            }
            t => Err(self.err_here(ParseErrorKind::Syntax(format!("expected `{c}`, found {t}")))),
        }
    }

    fn expect_ident(&mut self) -> Result<String, ParseError> {
        match self.bump() {
            Tok::Ident(s) => Ok(s),
            t => {
                self.pos -= 1;
                Err(self.err_here(ParseErrorKind::Syntax(format!(
                    "expected identifier, found {t}"
                ))))
            }
        }
    }

    fn expect_int(&mut self) -> Result<usize, ParseError> {
        match self.peek().clone() {
            Tok::Int(v) => {
                self.bump();
                Ok(v)
            }
            t => Err(self.err_here(ParseErrorKind::Syntax(format!(
                "expected integer, found {t}"
            )))),
        }
    }

    fn header(&mut self) -> Result<(), ParseError> {
        if matches!(self.peek(), Tok::Ident(s) if s == "OPENQASM") {
            self.bump();
            match self.peek().clone() {
                Tok::Real(v) if v.starts_with('2') => {
                    self.bump();
                }
                t => {
                    return Err(self.err_here(ParseErrorKind::Syntax(format!(
                        "expected version 2.0, found {t}"
                    ))))
                }
            }
            self.expect_sym(';')?;
        }
        Ok(())
    }

    fn qubit_arg(&mut self) -> Result<usize, ParseError> {
        let at = self.pos;
        let name = self.expect_ident()?;
        let (reg, size) = match &self.reg {
            Some(r) => r.clone(),
            None => return Err(self.err_at(at, ParseErrorKind::MissingRegister)),
        };
        if name != reg {
            return Err(self.err_at(at, ParseErrorKind::UnknownRegister(name)));
        }
        self.expect_sym('[')?;
        let idx_at = self.pos;
        let index = self.expect_int()?;
        self.expect_sym(']')?;
        if index >= size {
            return Err(self.err_at(idx_at, ParseErrorKind::QubitOutOfRange { index, size }));
        }
        Ok(index)
    }

    fn statement(&mut self, gates: &mut Vec<Gate>) -> Result<(), ParseError> {
        let at = self.pos;
        let word = self.expect_ident()?;
        match word.as_str() {
            "include" => {
                match self.bump() {
                    Tok::Str(_) => {}
                    t => {
                        self.pos -= 1;
                        return Err(self.err_here(ParseErrorKind::Syntax(format!(
                            "expected file name, found {t}"
                        ))));
                    }
                }
                self.expect_sym(';')
            }
            "qreg" => {
                if self.reg.is_some() {
                    return Err(self.err_at(at, ParseErrorKind::MultipleRegisters));
                }
                let name = self.expect_ident()?;
                self.expect_sym('[')?;
                let size = self.expect_int()?;
                self.expect_sym(']')?;
                self.expect_sym(';')?;
                self.reg = Some((name, size));
                Ok(())
            }
            "creg" | "measure" | "reset" | "barrier" | "if" | "gate" | "opaque" => {
                Err(self.err_at(at, ParseErrorKind::UnsupportedStatement(word)))
            }
            name => {
                let arity = match name {
                    "h" | "s" | "sdg" | "x" | "y" | "z" | "t" | "tdg" => 1,
                    "cx" | "cz" | "swap" => 2,
                    "ccx" | "ccz" => 3,
                    _ => {
                        return Err(
                            self.err_at(at, ParseErrorKind::UnsupportedGate(name.to_string()))
                        )
                    }
                };
                let mut qs = Vec::with_capacity(arity);
                for k in 0..arity {
                    if k > 0 {
                        self.expect_sym(',')?;
                    }
                    qs.push(self.qubit_arg()?);
                }
                self.expect_sym(';')?;
                for (i, a) in qs.iter().enumerate() {
                    if qs[i + 1..].contains(a) {
                        return Err(
                            self.err_at(at, ParseErrorKind::RepeatedQubit(name.to_string()))
                        );
                    }
                }
                emit(name, &qs, gates);
                Ok(())
            }
        }
    }
}

fn emit(name: &str, q: &[usize], gates: &mut Vec<Gate>) {
    let single = |k: GateKind| Gate::new(k, &q[..1]).expect("arity checked");
    match name {
        "h" => gates.push(single(GateKind::H)),
        "s" => gates.push(single(GateKind::S)),
        "sdg" => gates.push(single(GateKind::Sdg)),
        "x" => gates.push(single(GateKind::X)),
        "y" => gates.push(single(GateKind::Y)),
        "z" => gates.push(single(GateKind::Z)),
        "t" => gates.push(single(GateKind::T)),
        "tdg" => gates.push(single(GateKind::Tdg)),
        "cx" => gates.push(Gate::cx(q[0], q[1])),
        "cz" => gates.push(Gate::cz(q[0], q[1])),
        "swap" => gates.extend([
            Gate::cx(q[0], q[1]),
            Gate::cx(q[1], q[0]),
            Gate::cx(q[0], q[1]),
        ]),
        "ccx" => {
            gates.push(Gate::h(q[2]));
            gates.extend(ccz_network(q[0], q[1], q[2]));
            gates.push(Gate::h(q[2]));
        }
        "ccz" => gates.extend(ccz_network(q[0], q[1], q[2])),
        _ => unreachable!("gate names are validated before emission"),
    }
}

/// Seven-T, six-CX realization of CCZ on `(a, b, c)`.
pub fn ccz_network(a: usize, b: usize, c: usize) -> [Gate; 13] {
    [
        Gate::cx(b, c),
        Gate::tdg(c),
        Gate::cx(a, c),
        Gate::t(c),
        Gate::cx(b, c),
        Gate::tdg(c),
        Gate::cx(a, c),
        Gate::t(b),
        Gate::t(c),
        Gate::cx(a, b),
        Gate::t(a),
        Gate::tdg(b),
        Gate::cx(a, b),
    ]
}

/// Toffoli with controls `a`, `b` and target `c`.
pub fn ccx_network(a: usize, b: usize, c: usize) -> Vec<Gate> {
    let mut g = vec![Gate::h(c)];
    g.extend(ccz_network(a, b, c));
    g.push(Gate::h(c));
    g
}

pub fn parse_qasm(text: &str) -> Result<Circuit, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        reg: None,
    };
    p.header()?;
    let mut gates = Vec::new();
    while *p.peek() != Tok::Eof {
        p.statement(&mut gates)?;
    }
    let n = p.reg.as_ref().map_or(0, |r| r.1);
    Ok(Circuit::from_gates(n, gates).expect("qubit indices validated by the parser"))
}

pub fn write_qasm(c: &Circuit) -> String {
    let mut s = String::new();
    s.push_str("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n");
    let _ = writeln!(s, "qreg q[{}];", c.num_qubits());
    for g in c.gates() {
        let name = g.kind().qasm_name();
        match g.qubits() {
            [a] => {
                let _ = writeln!(s, "{name} q[{a}];");
            }
            [a, b] => {
                let _ = writeln!(s, "{name} q[{a}],q[{b}];");
            }
            _ => unreachable!(),
        }
    }
    s
}
