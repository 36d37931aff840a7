"""Selftest oracle suites and their reports."""

from satlab.evaluation.metrics import SelftestReport, SuiteResult
from satlab.evaluation.suites import OracleSuite, Outcome, Scale, SelftestPlan

__all__ = ["SelftestReport", "SuiteResult", "OracleSuite", "Outcome", "Scale", "SelftestPlan"]
