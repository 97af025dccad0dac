import argparse

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from core.exceptions import ExportError, VerificationError
from verifier.services.checks import CHECKS
from verifier.services.context import PipelineContext, PipelineOptions
from verifier.services.pipeline import EXPORT_SELECTORS, export_triangulation, run_pipeline
from verifier.services.renderers import FORMATS, render, render_check_list


class Command(BaseCommand):
    help = "Run every check of the 24-cell construction and print the report"

    def add_arguments(self, parser):
        parser.add_argument(
            "--format",
            choices=FORMATS,
            default=None,
            help=f"Report format (default: {settings.VERIFIER['REPORT_FORMAT']})",
        )
        parser.add_argument(
            "--export",
            nargs=2,
            metavar=("SELECTOR", "PATH"),
            help=f"Write a triangulation ({', '.join(EXPORT_SELECTORS)}) to PATH instead of running the checks",
        )
        parser.add_argument(
            "--list-checks",
            action="store_true",
            help="List the registered checks in report order",
        )
        parser.add_argument(
            "--jobs",
            type=int,
            default=None,
            help="Threads for the checks after S (default: VERIFIER_N_JOBS)",
        )
        parser.add_argument(
            "--inject-fault",
            action="store_true",
            help=argparse.SUPPRESS,
        )

    def handle(self, *args, **options):
        pipeline_options = PipelineOptions.from_settings(
            format=options["format"],
            n_jobs=options["jobs"],
            inject_fault=options["inject_fault"] or None,
        )
        if pipeline_options.format not in FORMATS:
            raise CommandError(f"unknown report format {pipeline_options.format}", returncode=2)

        if options["list_checks"]:
            self.stdout.write(render_check_list(CHECKS, pipeline_options.format), ending="")
            return

        ctx = PipelineContext(pipeline_options)
        if options["export"]:
            selector, path = options["export"]
            try:
                written = export_triangulation(selector, path, ctx)
            except ExportError as exc:
                raise CommandError(str(exc), returncode=2)
            except VerificationError as exc:
                raise CommandError(f"cannot build the {selector} triangulation: {exc}", returncode=1)
            self.stdout.write(f"Wrote {selector} triangulation to {written}")
            return

        report = run_pipeline(ctx=ctx)
        self.stdout.write(render(report, pipeline_options.format), ending="")
        if not report.ok:
            failed = ", ".join(c.check_id for c in report.failed)
            raise CommandError(f"{report.summary['failed']} checks failed: {failed}", returncode=1)
