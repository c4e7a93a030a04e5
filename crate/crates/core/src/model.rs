use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::ParseError;

/// States are addressed by their declaration index.
pub type StateId = usize;

/// A transition `src --effect--> dst`. Its identity is its index in
/// [`Vass::transitions`]; duplicates are permitted and kept apart.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Transition {
    pub src: StateId,
    pub dst: StateId,
    pub effect: Vec<BigInt>,
}

/// A vector addition system with states.
///
/// States and transitions keep their declaration order, and every algorithm
/// in the workspace iterates in that order, so identical inputs always
/// produce identical outputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vass {
    pub name: String,
    pub dim: usize,
    pub states: Vec<String>,
    pub transitions: Vec<Transition>,
}

impl Vass {
    pub fn new(name: impl Into<String>, dim: usize) -> Self {
        Vass {
            name: name.into(),
            dim,
            states: Vec::new(),
            transitions: Vec::new(),
        }
    }

    /// Declares a state and returns its index. Existing names are reused.
    pub fn add_state(&mut self, name: impl Into<String>) -> StateId {
        let name = name.into();
        if let Some(i) = self.states.iter().position(|s| *s == name) {
            return i;
        }
        self.states.push(name);
        self.states.len() - 1
    }

    pub fn add_transition(&mut self, src: StateId, effect: Vec<BigInt>, dst: StateId) -> usize {
        debug_assert_eq!(effect.len(), self.dim);
        debug_assert!(src < self.states.len() && dst < self.states.len());
        self.transitions.push(Transition { src, dst, effect });
        self.transitions.len() - 1
    }

    /// Convenience for tests and builders: effects from machine integers.
    pub fn add_transition_i64(&mut self, src: StateId, effect: &[i64], dst: StateId) -> usize {
        self.add_transition(src, effect.iter().map(|&e| BigInt::from(e)).collect(), dst)
    }

    pub fn state_index(&self, name: &str) -> Option<StateId> {
        self.states.iter().position(|s| s == name)
    }

    pub fn state_name(&self, id: StateId) -> &str {
        &self.states[id]
    }

    /// Maximum absolute value over all effect entries (0 for no transitions
    /// or dimension 0).
    pub fn max_norm(&self) -> BigInt {
        let mut m = BigInt::zero();
        for t in &self.transitions {
            for e in &t.effect {
                let a = e.abs();
                if a > m {
                    m = a;
                }
            }
        }
        m
    }

    /// Size measure `|Q| + |T| · d · (max_norm + 1)`.
    pub fn size(&self) -> BigInt {
        BigInt::from(self.states.len())
            + BigInt::from(self.transitions.len())
                * BigInt::from(self.dim)
                * (self.max_norm() + 1)
    }

    /// Indices of transitions leaving `q`, in declaration order.
    pub fn outgoing(&self, q: StateId) -> impl Iterator<Item = usize> + '_ {
        self.transitions
            .iter()
            .enumerate()
            .filter(move |(_, t)| t.src == q)
            .map(|(i, _)| i)
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        parse_vass(text)
    }
}

/// Parses the line-oriented text format:
///
/// ```text
/// vass <name>
/// dim <d>
/// state <id> ...
/// trans <src> <dst> <a1> ... <ad>
/// ```
///
/// `#` introduces a comment running to end of line; blank lines are ignored.
pub fn parse_vass(text: &str) -> Result<Vass, ParseError> {
    let mut vass: Option<Vass> = None;
    let mut dim: Option<usize> = None;

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let directive = tokens[0];
        let args = &tokens[1..];
        match directive {
            "vass" => {
                if args.len() != 1 {
                    return Err(ParseError::BadArity {
                        line,
                        directive: "vass".into(),
                        want: 1,
                        got: args.len(),
                    });
                }
                if vass.is_some() {
                    return Err(ParseError::DuplicateHeader { line });
                }
                vass = Some(Vass::new(args[0], 0));
            }
            _ if vass.is_none() => return Err(ParseError::MissingHeader { line }),
            "dim" => {
                if args.len() != 1 {
                    return Err(ParseError::BadArity {
                        line,
                        directive: "dim".into(),
                        want: 1,
                        got: args.len(),
                    });
                }
                if dim.is_some() {
                    return Err(ParseError::DuplicateDim { line });
                }
                let d: usize = args[0].parse().map_err(|_| ParseError::BadNumber {
                    line,
                    token: args[0].to_string(),
                })?;
                dim = Some(d);
                vass.as_mut().unwrap().dim = d;
            }
            "state" => {
                if args.is_empty() {
                    return Err(ParseError::BadArity {
                        line,
                        directive: "state".into(),
                        want: 1,
                        got: 0,
                    });
                }
                let v = vass.as_mut().unwrap();
                for name in args {
                    if v.state_index(name).is_some() {
                        return Err(ParseError::DuplicateState {
                            line,
                            state: name.to_string(),
                        });
                    }
                    v.add_state(*name);
                }
            }
            "trans" => {
                let d = dim.ok_or(ParseError::BeforeDim {
                    line,
                    directive: "trans".into(),
                })?;
                if args.len() < 2 {
                    return Err(ParseError::BadArity {
                        line,
                        directive: "trans".into(),
                        want: 2 + d,
                        got: args.len(),
                    });
                }
                let v = vass.as_mut().unwrap();
                let src = v
                    .state_index(args[0])
                    .ok_or_else(|| ParseError::UndeclaredState {
                        line,
                        state: args[0].to_string(),
                    })?;
                let dst = v
                    .state_index(args[1])
                    .ok_or_else(|| ParseError::UndeclaredState {
                        line,
                        state: args[1].to_string(),
                    })?;
                let nums = &args[2..];
                if nums.len() != d {
                    return Err(ParseError::EffectArity {
                        line,
                        got: nums.len(),
                        want: d,
                    });
                }
                let mut effect = Vec::with_capacity(d);
                for tok in nums {
                    let e = BigInt::from_str(tok).map_err(|_| ParseError::BadNumber {
                        line,
                        token: tok.to_string(),
                    })?;
                    effect.push(e);
                }
                v.transitions.push(Transition { src, dst, effect });
            }
            other => {
                return Err(ParseError::UnknownDirective {
                    line,
                    directive: other.to_string(),
                })
            }
        }
    }

    let mut v = vass.ok_or(ParseError::MissingHeader { line: 1 })?;
    let d = dim.ok_or(ParseError::MissingDim)?;
    v.dim = d;
    Ok(v)
}

impl fmt::Display for Vass {
    /// Canonical serialization: one declaration per line, declaration order
    /// preserved, so `parse ∘ to_string` is the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vass {}", self.name)?;
        writeln!(f, "dim {}", self.dim)?;
        for s in &self.states {
            writeln!(f, "state {s}")?;
        }
        for t in &self.transitions {
            write!(
                f,
                "trans {} {}",
                self.states[t.src], self.states[t.dst]
            )?;
            for e in &t.effect {
                write!(f, " {e}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
