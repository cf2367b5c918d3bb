// Copyright 2026 The qshor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::qgates::{GateKind, GateOp};

/// Ordered list of gate applications over a fixed number of qubits.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Circuit {
    num_qubits: usize,
    ops: Vec<GateOp>,
}

impl Circuit {
    pub fn new(num_qubits: usize) -> Self {
        Self { num_qubits, ops: Vec::new() }
    }

    pub fn from_ops(num_qubits: usize, ops: impl IntoIterator<Item = GateOp>) -> Result<Self> {
        let mut circuit = Self::new(num_qubits);
        for op in ops {
            circuit.push(op)?;
        }
        Ok(circuit)
    }

    pub fn push(&mut self, op: GateOp) -> Result<&mut Self> {
        op.validate(self.num_qubits)?;
        self.ops.push(op);
        Ok(self)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn ops(&self) -> &[GateOp] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// Appends every op of `other`, which must not be wider than `self`.
    pub fn append(&mut self, other: &Circuit) -> Result<&mut Self> {
        if other.num_qubits > self.num_qubits {
            return Err(Error::WidthMismatch { circuit: other.num_qubits, state: self.num_qubits });
        }
        self.ops.extend_from_slice(&other.ops);
        Ok(self)
    }

    /// Reversed op order with every gate replaced by its inverse.
    pub fn inverse(&self) -> Self {
        Self { num_qubits: self.num_qubits, ops: self.ops.iter().rev().map(|op| op.dagger()).collect() }
    }

    /// Equivalent circuit over CNOT and one-qubit gates only.
    pub fn lowered(&self) -> Self {
        Self { num_qubits: self.num_qubits, ops: self.ops.iter().flat_map(GateOp::lower).collect() }
    }

    pub fn is_elementary(&self) -> bool {
        self.ops.iter().all(|op| op.kind.is_elementary())
    }

    /// Places this circuit on qubits `offset + 1 ..= offset + width` of a
    /// register with `num_qubits` qubits.
    pub fn embedded(&self, num_qubits: usize, offset: usize) -> Result<Self> {
        if offset + self.num_qubits > num_qubits {
            return Err(Error::WidthMismatch { circuit: offset + self.num_qubits, state: num_qubits });
        }
        let ops = self.ops.iter().map(|op| GateOp {
            kind: op.kind,
            target: op.target + offset,
            control: op.control.map(|c| c + offset),
        });
        Self::from_ops(num_qubits, ops)
    }

    /// Line-oriented text form: a `# qubits N` header, then one
    /// `GATE k control target` line per op.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# qubits {}", self.num_qubits)?;
        for op in &self.ops {
            writeln!(f, "{op}")?;
        }
        Ok(())
    }
}

impl FromStr for Circuit {
    type Err = Error;

    /// Parses the text form. Without a `# qubits N` header the width is the
    /// largest qubit index mentioned.
    fn from_str(text: &str) -> Result<Self> {
        let mut declared = None;
        let mut ops = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let line_no = lineno + 1;
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                let mut words = comment.split_whitespace();
                if words.next() == Some("qubits") {
                    let width = words
                        .next()
                        .and_then(|w| w.parse::<usize>().ok())
                        .ok_or_else(|| parse_err(line_no, "malformed qubits header"))?;
                    declared = Some(width);
                }
                continue;
            }
            ops.push(parse_op(line).map_err(|m| parse_err(line_no, &m))?);
        }
        let width = declared.unwrap_or_else(|| ops.iter().map(GateOp::max_qubit).max().unwrap_or(0));
        Circuit::from_ops(width, ops)
    }
}

fn parse_err(line: usize, message: &str) -> Error {
    Error::Parse { line, message: message.to_string() }
}

fn parse_op(line: &str) -> std::result::Result<GateOp, String> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    let [name, k, control, target] = fields[..] else {
        return Err(format!("expected 4 fields, found {}", fields.len()));
    };
    let opt = |s: &str, what: &str| -> std::result::Result<Option<u64>, String> {
        if s == "-" {
            Ok(None)
        } else {
            s.parse().map(Some).map_err(|_| format!("bad {what} '{s}'"))
        }
    };
    let k = opt(k, "phase index")?;
    let control = opt(control, "control")?.map(|c| c as usize);
    let target = opt(target, "target")?.ok_or("missing target")? as usize;
    let need_k = || -> std::result::Result<u32, String> {
        k.and_then(|k| u32::try_from(k).ok()).ok_or_else(|| format!("{name} needs a phase index"))
    };
    let kind = match name {
        "X" => GateKind::PauliX,
        "H" => GateKind::Hadamard,
        "P" => GateKind::Phase(need_k()?),
        "PD" => GateKind::PhaseDagger(need_k()?),
        "CX" => GateKind::Cnot,
        "CP" => GateKind::ControlledPhase(need_k()?),
        "CPD" => GateKind::ControlledPhaseDagger(need_k()?),
        "SW" => GateKind::Swap,
        other => return Err(format!("unknown gate '{other}'")),
    };
    if kind.phase_index().is_none() && k.is_some() {
        return Err(format!("{name} takes no phase index"));
    }
    Ok(GateOp::new(kind, control, target))
}
