from .runner import (SUITES, CaseResult, Outcome, Suite, Verdict, available_theorems, get_suite, register,
                     verify_all, verify_theorem)
