//! Golden-value suite, the same one `triloc validate` runs.

use triloc::cli::{validate, ValidateOptions};

fn main() -> triloc::Result<()> {
    let summary = validate(&ValidateOptions::default())?;
    for c in &summary.checks {
        let tag = if c.passed { "ok  " } else { "FAIL" };
        let note = c.note.as_deref().map(|n| format!("  ({n})")).unwrap_or_default();
        println!("{tag} {:<22} expected {:>9.5} got {:>12.8}{note}", c.name, c.expected, c.actual);
    }
    println!("all passed: {}", summary.passed);
    Ok(())
}
