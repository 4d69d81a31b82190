//! Writes the `table1` and `fig2` presets as CSV plus JSON sidecars.
//!
//! ```bash
//! cargo run --release --example figure_presets -- out/
//! ```

use std::path::PathBuf;

use triloc::cli::{run_figure, FigurePreset, OutputFormat};
use triloc::nonlocality::OptimizerConfig;

fn main() -> triloc::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("triloc_figures"));
    for preset in [FigurePreset::Table1, FigurePreset::Fig2] {
        for path in run_figure(preset, &dir, OutputFormat::Csv, &OptimizerConfig::default())? {
            println!("{}", path.display());
        }
    }
    Ok(())
}
