//! OpenQASM 2.0 emission and a reader for the subset we emit.
//!
//! `q[k]` is qubit `k` in the crate's numbering (most significant first) and
//! is measured into `c[k]`.

use crate::error::{Error, Result};
use crate::statevec::GateOp;
use std::fmt::Write;

fn gate_line(g: &GateOp) -> String {
    match *g {
        GateOp::U3 {
            qubit,
            theta,
            phi,
            lambda,
        } => format!("u3({theta:.15},{phi:.15},{lambda:.15}) q[{qubit}];"),
        GateOp::Cnot { control, target } => format!("cx q[{control}],q[{target}];"),
        GateOp::H(q) => format!("h q[{q}];"),
        GateOp::Sdg(q) => format!("sdg q[{q}];"),
    }
}

/// Preparation, a barrier, basis change, then measurement of every qubit.
pub fn emit(n: usize, prep: &[GateOp], basis_change: &[GateOp]) -> String {
    let mut out = String::new();
    writeln!(out, "OPENQASM 2.0;").unwrap();
    writeln!(out, "include \"qelib1.inc\";").unwrap();
    writeln!(out, "qreg q[{n}];").unwrap();
    writeln!(out, "creg c[{n}];").unwrap();
    for g in prep {
        writeln!(out, "{}", gate_line(g)).unwrap();
    }
    let all: Vec<String> = (0..n).map(|k| format!("q[{k}]")).collect();
    writeln!(out, "barrier {};", all.join(",")).unwrap();
    for g in basis_change {
        writeln!(out, "{}", gate_line(g)).unwrap();
    }
    for k in 0..n {
        writeln!(out, "measure q[{k}] -> c[{k}];").unwrap();
    }
    out
}

/// Gates of a circuit produced by [`emit`], split at the barrier into
/// `(preparation, basis_change)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ParsedCircuit {
    pub num_qubits: usize,
    pub prep: Vec<GateOp>,
    pub basis_change: Vec<GateOp>,
    pub measured: Vec<usize>,
}

fn qubit_arg(s: &str, line: usize) -> Result<usize> {
    let s = s.trim();
    let inner = s
        .strip_prefix("q[")
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Qasm {
            line,
            msg: format!("bad qubit operand {s:?}"),
        })?;
    inner.parse().map_err(|_| Error::Qasm {
        line,
        msg: format!("bad qubit index {inner:?}"),
    })
}

pub fn parse(text: &str) -> Result<ParsedCircuit> {
    let mut num_qubits = None;
    let mut prep = Vec::new();
    let mut basis = Vec::new();
    let mut measured = Vec::new();
    let mut after_barrier = false;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with("//") {
            continue;
        }
        let stmt = line.strip_suffix(';').ok_or_else(|| Error::Qasm {
            line: line_no,
            msg: "missing semicolon".into(),
        })?;
        let err = |msg: &str| Error::Qasm {
            line: line_no,
            msg: msg.to_string(),
        };
        let (head, rest) = stmt.split_once(' ').unwrap_or((stmt, ""));
        let target = if after_barrier { &mut basis } else { &mut prep };
        match head {
            "OPENQASM" | "include" | "creg" => {}
            "qreg" => num_qubits = Some(qubit_arg(rest, line_no)?),
            "barrier" => after_barrier = true,
            "h" => target.push(GateOp::H(qubit_arg(rest, line_no)?)),
            "sdg" => target.push(GateOp::Sdg(qubit_arg(rest, line_no)?)),
            "cx" => {
                let (c, t) = rest.split_once(',').ok_or_else(|| err("cx needs two operands"))?;
                target.push(GateOp::Cnot {
                    control: qubit_arg(c, line_no)?,
                    target: qubit_arg(t, line_no)?,
                });
            }
            "measure" => {
                let (q, _) = rest.split_once("->").ok_or_else(|| err("measure needs ->"))?;
                measured.push(qubit_arg(q, line_no)?);
            }
            h if h.starts_with("u3(") => {
                let close = stmt.find(')').ok_or_else(|| err("unterminated u3"))?;
                let params: Vec<f64> = stmt[3..close]
                    .split(',')
                    .map(|p| p.trim().parse::<f64>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| err("bad u3 parameter"))?;
                if params.len() != 3 {
                    return Err(err("u3 takes three parameters"));
                }
                target.push(GateOp::U3 {
                    qubit: qubit_arg(&stmt[close + 1..], line_no)?,
                    theta: params[0],
                    phi: params[1],
                    lambda: params[2],
                });
            }
            other => return Err(err(&format!("unsupported statement {other:?}"))),
        }
    }
    Ok(ParsedCircuit {
        num_qubits: num_qubits.ok_or(Error::Qasm {
            line: 0,
            msg: "no qreg".into(),
        })?,
        prep,
        basis_change: basis,
        measured,
    })
}
