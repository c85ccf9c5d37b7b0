from .run_spec import OutFormat, RunSpec, parse_number

__all__ = ["OutFormat", "RunSpec", "parse_number"]
