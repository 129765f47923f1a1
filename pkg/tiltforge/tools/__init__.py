from .get_degree_spec import get_degree_spec, get_grading
from .codec import serialize, parse, export_dot, presentation_to_dict, format_relation
from .report import report_to_dict, report_to_text, to_json
