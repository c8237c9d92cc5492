//! Full multiplication tables over the blade basis, as JSON, CSV or text.

use serde::{Deserialize, Serialize};

use crate::blade::Blade;
use crate::error::{Error, Result};
use crate::expr;
use crate::form::Form;
use crate::products::ProductKind;
use crate::rational;
use crate::signature::Signature;

pub const TABLE_MAX_DIM: u32 = 8;
pub const TEXT_MAX_DIM: u32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigSpec {
    pub p: u32,
    pub q: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermEntry {
    pub blade: String,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub left: String,
    pub right: String,
    /// `None` where the product is undefined (triangle with descending grades).
    pub result: Option<Vec<TermEntry>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub signature: SigSpec,
    pub product: String,
    pub basis: Vec<String>,
    pub entries: Vec<TableEntry>,
}

fn terms_of(f: &Form) -> Vec<TermEntry> {
    let n = f.sig().dim();
    f.terms()
        .map(|(b, c)| TermEntry {
            blade: b.render(n),
            coeff: rational::render(c),
        })
        .collect()
}

pub fn emit_table(sig: Signature, kind: ProductKind) -> Result<TableDocument> {
    let n = sig.dim();
    if n > TABLE_MAX_DIM {
        return Err(Error::Budget {
            n,
            max: TABLE_MAX_DIM,
        });
    }
    let basis = Blade::basis(n);
    let mut entries = Vec::with_capacity(basis.len() * basis.len());
    for &a in &basis {
        let fa = Form::blade(sig, a);
        for &b in &basis {
            let fb = Form::blade(sig, b);
            let result = match kind.apply(&fa, &fb) {
                Ok(f) => Some(terms_of(&f)),
                Err(Error::TriangleGradeOrder { .. }) => None,
                Err(e) => return Err(e),
            };
            entries.push(TableEntry {
                left: a.render(n),
                right: b.render(n),
                result,
            });
        }
    }
    Ok(TableDocument {
        signature: SigSpec {
            p: sig.p(),
            q: sig.q(),
        },
        product: kind.to_string(),
        basis: basis.iter().map(|b| b.render(n)).collect(),
        entries,
    })
}

fn term_list(terms: &[TermEntry]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    terms
        .iter()
        .map(|t| {
            if t.coeff.starts_with('-') {
                format!("{}*{}", t.coeff, t.blade)
            } else {
                format!("+{}*{}", t.coeff, t.blade)
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn compact(terms: &[TermEntry]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, t) in terms.iter().enumerate() {
        let (neg, mag) = match t.coeff.strip_prefix('-') {
            Some(m) => (true, m),
            None => (false, t.coeff.as_str()),
        };
        if neg {
            s.push('-');
        } else if k > 0 {
            s.push('+');
        }
        match (mag == "1", t.blade == "1") {
            (true, _) => s.push_str(&t.blade),
            (false, true) => s.push_str(mag),
            (false, false) => {
                s.push_str(mag);
                s.push('*');
                s.push_str(&t.blade);
            }
        }
    }
    s
}

impl TableDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }

    pub fn from_json(src: &str) -> Result<Self> {
        serde_json::from_str(src).map_err(|e| Error::Eval(format!("table JSON: {e}")))
    }

    /// Columns `left,right,result`; the result is a signed term list such as
    /// `+1*e12 -1/2*e3`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("left,right,result\n");
        for e in &self.entries {
            let result = match &e.result {
                Some(t) => term_list(t),
                None => "undefined".into(),
            };
            out.push_str(&format!("{},{},{}\n", e.left, e.right, result));
        }
        out
    }

    /// Aligned grid, rows indexed by the left factor.
    pub fn to_text(&self) -> Result<String> {
        let n = self.signature.p + self.signature.q;
        if n > TEXT_MAX_DIM {
            return Err(Error::Budget {
                n,
                max: TEXT_MAX_DIM,
            });
        }
        let size = self.basis.len();
        let cells: Vec<String> = self
            .entries
            .iter()
            .map(|e| {
                e.result
                    .as_deref()
                    .map(compact)
                    .unwrap_or_else(|| ".".into())
            })
            .collect();
        let width = cells
            .iter()
            .chain(self.basis.iter())
            .map(|c| c.chars().count())
            .max()
            .unwrap_or(1);
        let mut out = format!(
            "{} ({},{})\n",
            self.product, self.signature.p, self.signature.q
        );
        out.push_str(&format!("{:>width$} |", ""));
        for b in &self.basis {
            out.push_str(&format!(" {b:>width$}"));
        }
        out.push('\n');
        out.push_str(&"-".repeat((width + 1) * (size + 1) + 1));
        out.push('\n');
        for (row, left) in self.basis.iter().enumerate() {
            out.push_str(&format!("{left:>width$} |"));
            for cell in &cells[row * size..(row + 1) * size] {
                out.push_str(&format!(" {cell:>width$}"));
            }
            out.push('\n');
        }
        Ok(out)
    }
}

/// Re-evaluates every entry of a table with the kernel and returns the
/// entries that disagree, rendered as `left <product> right`.
pub fn validate(doc: &TableDocument) -> Result<Vec<String>> {
    let sig = Signature::new(doc.signature.p, doc.signature.q)?;
    let kind: ProductKind = doc.product.parse()?;
    let expected = sig.basis_len() * sig.basis_len();
    if doc.entries.len() != expected {
        return Err(Error::Eval(format!(
            "table has {} entries, expected {expected}",
            doc.entries.len()
        )));
    }
    let mut bad = Vec::new();
    for e in &doc.entries {
        let left = expr::eval_str(&e.left, sig)?;
        let right = expr::eval_str(&e.right, sig)?;
        let listed = match &e.result {
            Some(terms) => {
                let mut f = Form::zero(sig);
                for t in terms {
                    let blade = expr::eval_str(&t.blade, sig)?;
                    let c = rational::parse(&t.coeff)
                        .ok_or_else(|| Error::Eval(format!("bad coefficient {:?}", t.coeff)))?;
                    f = &f + &blade.scale(&c);
                }
                Some(f)
            }
            None => None,
        };
        let kernel = match kind.apply(&left, &right) {
            Ok(f) => Some(f),
            Err(Error::TriangleGradeOrder { .. }) => None,
            Err(err) => return Err(err),
        };
        if listed != kernel {
            bad.push(format!("{} {} {}", e.left, doc.product, e.right));
        }
    }
    Ok(bad)
}
