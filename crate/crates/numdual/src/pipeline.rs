//! The dualinfo pipeline: translate, search, summarize.

use std::fmt;

use serde_json::{json, Value};

use crate::gcorner::{
    find_gcorners, minimal_gcorners, EngineError, GCornerRecord, SearchOptions, Strategy,
};
use crate::hilbert::{
    format_polynomial, hilbert_data, polynomial_coeff_strings, HilbertData, HilbertError,
};
use crate::input::{ParseError, SystemSpec};
use crate::kernel::DualBasis;
use crate::monomial::Monomial;
use crate::order::LocalOrder;
use crate::poly::Polynomial;
use crate::sbasis::{recover_sbasis_element, SBasisError};
use crate::scalar::{Scalar, C64};
use crate::sylvester::embedded_truncated_dual;

#[derive(Clone, PartialEq, Debug)]
pub enum PipelineError {
    Parse(ParseError),
    Engine(EngineError),
    SBasis(SBasisError),
    Hilbert(HilbertError),
}

impl fmt::Display for PipelineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PipelineError::Parse(e) => write!(f, "{}", e),
            PipelineError::Engine(e) => write!(f, "{}", e),
            PipelineError::SBasis(e) => write!(f, "{}", e),
            PipelineError::Hilbert(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for PipelineError {}

impl From<ParseError> for PipelineError {
    fn from(e: ParseError) -> Self {
        PipelineError::Parse(e)
    }
}

impl From<EngineError> for PipelineError {
    fn from(e: EngineError) -> Self {
        PipelineError::Engine(e)
    }
}

impl From<SBasisError> for PipelineError {
    fn from(e: SBasisError) -> Self {
        PipelineError::SBasis(e)
    }
}

impl From<HilbertError> for PipelineError {
    fn from(e: HilbertError) -> Self {
        PipelineError::Hilbert(e)
    }
}

impl PipelineError {
    /// Process exit status: 2 parse error, 3 numerical failure, 4 point not
    /// on variety.
    pub fn exit_code(&self) -> i32 {
        match self {
            PipelineError::Parse(_) => 2,
            PipelineError::Engine(EngineError::PointNotOnVariety) => 4,
            PipelineError::SBasis(SBasisError::Engine(EngineError::PointNotOnVariety)) => 4,
            _ => 3,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub strategy: Strategy,
    pub standard_basis: bool,
    pub tighter_stop: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            strategy: Strategy::MourrainHomogeneous,
            standard_basis: false,
            tighter_stop: false,
        }
    }
}

/// Everything the pipeline reports: the truncated dual basis, the g-corners
/// with their discovery degrees, the regularity bound, Hilbert values and
/// polynomial, the dimension verdict, and optionally a standard basis.
#[derive(Clone, Debug)]
pub struct DualInfoReport {
    pub variables: Vec<String>,
    pub tolerance: f64,
    pub strategy: Strategy,
    pub order: LocalOrder,
    pub reached_degree: u32,
    pub truncated: bool,
    /// `D_0^(d-e)[I]` extracted from the last Sylvester dual.
    pub dual_basis: DualBasis<C64>,
    pub records: Vec<GCornerRecord>,
    pub g_corners: Vec<Monomial>,
    pub hilbert: HilbertData,
    pub standard_basis: Option<Vec<Polynomial<C64>>>,
}

/// Runs the whole pipeline on a parsed system.
pub fn dualinfo_run(spec: &SystemSpec, options: &RunOptions) -> Result<DualInfoReport, PipelineError> {
    let nvars = spec.variables.len();
    let order = LocalOrder::new(nvars, spec.tiebreak);

    let translated: Vec<Polynomial<C64>> = spec
        .generators
        .iter()
        .map(|g| g.translate(&spec.point).cleanup(spec.tolerance))
        .filter(|g| !g.is_zero())
        .collect();
    let max_ecart = translated.iter().filter_map(Polynomial::ecart).max().unwrap_or(0);

    let search_options = SearchOptions {
        max_degree: spec.max_degree_override,
        tighter_stop: options.tighter_stop,
    };
    let search = find_gcorners(&translated, spec.tolerance, options.strategy, &order, &search_options)?;

    let g_corners = minimal_gcorners(&search.records);
    let hilbert = hilbert_data(&g_corners, nvars)?;

    let last_sdual = search.sduals.last().expect("search visits degree 0");
    let mut dual_basis = embedded_truncated_dual(last_sdual, max_ecart, &order);
    // presentation copy: suppress float residue well below the tolerance
    // and list elements from 1 upward
    for p in dual_basis.elements.iter_mut() {
        *p = p.cleanup(spec.tolerance);
    }
    dual_basis.elements.sort_by(|a, b| {
        match (a.lead_monomial(&order), b.lead_monomial(&order)) {
            (Some(la), Some(lb)) => order.compare_dual(la, lb),
            _ => std::cmp::Ordering::Equal,
        }
    });

    let standard_basis = if options.standard_basis {
        let mut out = Vec::new();
        for record in &search.records {
            if !g_corners.contains(&record.corner) {
                continue;
            }
            let sdual = &search.sduals[record.found_at as usize];
            out.push(recover_sbasis_element(sdual, &record.corner, &order, spec.tolerance)?);
        }
        Some(out)
    } else {
        None
    };

    Ok(DualInfoReport {
        variables: spec.variables.clone(),
        tolerance: spec.tolerance,
        strategy: options.strategy,
        order,
        reached_degree: search.reached_degree,
        truncated: search.truncated,
        dual_basis,
        records: search.records,
        g_corners,
        hilbert,
        standard_basis,
    })
}

fn strategy_name(strategy: Strategy) -> &'static str {
    match strategy {
        Strategy::SylvesterArray => "sylvester",
        Strategy::MourrainHomogeneous => "mourrain",
    }
}

impl DualInfoReport {
    fn found_at(&self, corner: &Monomial) -> Option<u32> {
        self.records
            .iter()
            .find(|r| &r.corner == corner)
            .map(|r| r.found_at)
    }

    /// Human-readable rendering of the five-part result plus the dimension.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let names = &self.variables;
        out.push_str(&format!(
            "dual basis (degree <= {}, {} elements):\n",
            self.dual_basis.degree,
            self.dual_basis.dim()
        ));
        for p in &self.dual_basis.elements {
            out.push_str(&format!("  {}\n", p.format(names, &self.order)));
        }
        out.push_str("g-corners:\n");
        for c in &self.g_corners {
            match self.found_at(c) {
                Some(d) => out.push_str(&format!("  {} (found at degree {})\n", c.format(names), d)),
                None => out.push_str(&format!("  {}\n", c.format(names))),
            }
        }
        out.push_str(&format!(
            "regularity bound: {} (tight: {})\n",
            self.hilbert.reported_bound, self.hilbert.tight_bound
        ));
        let values: Vec<String> = self.hilbert.values.iter().map(u64::to_string).collect();
        out.push_str(&format!("hilbert values: {}\n", values.join(", ")));
        out.push_str(&format!(
            "hilbert polynomial: {}\n",
            format_polynomial(&self.hilbert.polynomial)
        ));
        if self.hilbert.dimension < 0 {
            out.push_str("dimension: isolated point\n");
        } else {
            out.push_str(&format!("dimension: {}\n", self.hilbert.dimension));
        }
        if let Some(basis) = &self.standard_basis {
            out.push_str("standard basis:\n");
            for p in basis {
                out.push_str(&format!("  {}\n", p.format(names, &self.order)));
            }
        }
        if self.truncated {
            out.push_str(&format!(
                "warning: search truncated at degree {} before the stopping bound\n",
                self.reached_degree
            ));
        }
        out
    }

    fn functional_json(&self, p: &crate::dual::DualFunctional<C64>) -> Value {
        let mut terms: Vec<(&Monomial, &C64)> = p.terms().collect();
        terms.sort_by(|a, b| self.order.compare_dual(b.0, a.0));
        let items: Vec<Value> = terms
            .into_iter()
            .map(|(m, c)| {
                let (re, im) = c.approx_parts();
                json!({ "exponents": m.exponents(), "coefficient": [re, im] })
            })
            .collect();
        json!({ "terms": items, "text": p.format(&self.variables, &self.order) })
    }

    fn polynomial_json(&self, p: &Polynomial<C64>) -> Value {
        let mut terms: Vec<(&Monomial, &C64)> = p.terms().collect();
        terms.sort_by(|a, b| self.order.compare(b.0, a.0));
        let items: Vec<Value> = terms
            .into_iter()
            .map(|(m, c)| {
                let (re, im) = c.approx_parts();
                json!({ "exponents": m.exponents(), "coefficient": [re, im] })
            })
            .collect();
        json!({ "terms": items, "text": p.format(&self.variables, &self.order) })
    }

    /// Machine-readable rendering; complex numbers appear as `[re, im]`.
    pub fn to_json(&self) -> Value {
        let duals: Vec<Value> = self
            .dual_basis
            .elements
            .iter()
            .map(|p| self.functional_json(p))
            .collect();
        let corners: Vec<Value> = self
            .g_corners
            .iter()
            .map(|c| {
                json!({
                    "exponents": c.exponents(),
                    "text": c.format(&self.variables),
                    "found_at": self.found_at(c),
                })
            })
            .collect();
        let mut root = json!({
            "variables": self.variables,
            "tolerance": self.tolerance,
            "strategy": strategy_name(self.strategy),
            "reached_degree": self.reached_degree,
            "truncated": self.truncated,
            "dual_basis": { "degree": self.dual_basis.degree, "elements": duals },
            "g_corners": corners,
            "regularity_bound": self.hilbert.reported_bound,
            "tight_bound": self.hilbert.tight_bound,
            "hilbert_values": self.hilbert.values,
            "hilbert_polynomial_coeffs": polynomial_coeff_strings(&self.hilbert.polynomial),
            "hilbert_polynomial": format_polynomial(&self.hilbert.polynomial),
            "dimension": self.hilbert.dimension,
        });
        if let Some(basis) = &self.standard_basis {
            let items: Vec<Value> = basis.iter().map(|p| self.polynomial_json(p)).collect();
            root["standard_basis"] = Value::Array(items);
        }
        root
    }
}
