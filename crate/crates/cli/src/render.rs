//! Human-readable renderings of the report and result types.

use hessmap_core::differential::KernelReport;
use hessmap_core::pipeline::{KayalResult, KayalStage, KayalStatus};
use hessmap_core::verify::CheckItem;

/// Markdown table of the verification report, one row per item.
pub fn report_markdown(items: &[CheckItem]) -> String {
    let mut out = String::new();
    out.push_str("# Verification report\n\n");
    let passed = items.iter().filter(|i| i.pass).count();
    out.push_str(&format!("{passed}/{} checks passed.\n\n", items.len()));
    out.push_str("| status | id | paper_ref | expected | computed |\n");
    out.push_str("|--------|----|-----------|----------|----------|\n");
    for i in items {
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} |\n",
            if i.pass { "pass" } else { "FAIL" },
            i.id,
            i.paper_ref,
            i.expected,
            i.computed
        ));
    }
    out
}

pub fn kayal_text(r: &KayalResult) -> String {
    let mut out = String::new();
    let status = match r.status {
        KayalStatus::Equivalent => "equivalent to a sum of independent d-th powers",
        KayalStatus::Rejected => "rejected",
        KayalStatus::Inconclusive => "inconclusive",
    };
    let stage = match r.stage {
        KayalStage::HessianZero => "Hessian determinant is zero",
        KayalStage::FactorizationFailed => "Hessian does not factor into linear forms",
        KayalStage::FactorizationIncomplete => "factorization incomplete over Q",
        KayalStage::LinearSolveFailed => "no exact power combination",
        KayalStage::Success => "success",
    };
    out.push_str(&format!("status: {status} ({stage})\n"));
    if !r.note.is_empty() {
        out.push_str(&format!("note: {}\n", r.note));
    }
    for (alpha, form) in &r.forms {
        out.push_str(&format!("  {alpha} * ({form})^d\n"));
    }
    out
}

pub fn kernel_text(r: &KernelReport) -> String {
    let mut out = format!("kernel dimension: {}\n", r.dim);
    for b in &r.basis {
        out.push_str(&format!("  {b}\n"));
    }
    out
}
