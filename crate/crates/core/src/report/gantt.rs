//! ASCII Gantt charts.
//!
//! One cell per merged slice, labelled with the process, and a second line with
//! the time boundary under every bar:
//!
//! ```text
//! |P1|P2|P3|P4 |
//! 0  11 57 139 234
//! ```
//!
//! Idle gaps get an `idle` cell. Rows wrap at the requested width; a wrapped
//! row repeats the boundary it starts from.

use crate::engine::Schedule;
use crate::workload::Time;

pub const MIN_GANTT_WIDTH: usize = 20;

struct Cell {
    label: String,
    start: Time,
    end: Time,
}

impl Cell {
    /// Inner width: room for the label and for the start boundary, which is
    /// printed under the cell's left bar.
    fn width(&self) -> usize {
        self.label.len().max(self.start.to_string().len())
    }
}

fn cells(schedule: &Schedule) -> Vec<Cell> {
    let mut out = Vec::new();
    let mut cursor = None;
    for s in schedule.merged() {
        if let Some(prev) = cursor {
            if s.start > prev {
                out.push(Cell {
                    label: "idle".to_string(),
                    start: prev,
                    end: s.start,
                });
            }
        }
        out.push(Cell {
            label: s.pid.to_string(),
            start: s.start,
            end: s.end,
        });
        cursor = Some(s.end);
    }
    out
}

fn render_row(row: &[Cell]) -> String {
    let mut bars = String::from("|");
    let mut ticks = String::new();
    for cell in row {
        let w = cell.width();
        bars.push_str(&format!("{:^w$}|", cell.label));
        ticks.push_str(&format!("{:<width$}", cell.start, width = w + 1));
    }
    if let Some(last) = row.last() {
        ticks.push_str(&last.end.to_string());
    }
    format!("{bars}\n{ticks}\n")
}

/// Renders `schedule` as an ASCII Gantt chart no wider than `width` columns
/// (values below [`MIN_GANTT_WIDTH`] are raised to it). A single cell wider
/// than the limit still gets a row of its own.
pub fn render_gantt(schedule: &Schedule, width: usize) -> String {
    let width = width.max(MIN_GANTT_WIDTH);
    let cells = cells(schedule);
    let mut out = String::new();
    let mut row_start = 0;
    let mut used = 1;
    for (i, cell) in cells.iter().enumerate() {
        let w = cell.width() + 1;
        let tail = cell.end.to_string().len();
        if i > row_start && used + w + tail > width + 1 {
            out.push_str(&render_row(&cells[row_start..i]));
            row_start = i;
            used = 1;
        }
        used += w;
    }
    if row_start < cells.len() {
        out.push_str(&render_row(&cells[row_start..]));
    }
    out
}
