from components.eval__reports.emitters import emit_report, emit_table, format_number, report_payload, summary_lines

__all__ = ["emit_report", "emit_table", "format_number", "report_payload", "summary_lines"]
