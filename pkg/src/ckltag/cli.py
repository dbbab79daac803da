"""Command-line interface.

Exit codes: 0 success, 1 user error (bad arguments, unknown tags, invalid
files), 2 internal error. Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .config import ServiceConfig, Toolkit
from .documents import Annotation
from .errors import CkltagError
from .normalize import normalize_text
from .tagset import TagCategory
from .tokenizer import tokenize

__all__ = ["cli", "main"]


def _toolkit(ctx: click.Context, include_store: bool) -> Toolkit:
    cached: Toolkit | None = ctx.obj.get("toolkit")
    if cached is not None and (cached.store is not None or not include_store):
        return cached
    toolkit = Toolkit.from_config(ctx.obj["config"], include_store=include_store)
    ctx.obj["toolkit"] = toolkit
    return toolkit


@click.group()
@click.option("--corpus-dir", default="corpus", show_default=True, help="Corpus directory.")
@click.option("--lexicon", "lexicon_path", default=None, help="Root lexicon file (default: packaged seed).")
@click.option("--affixes", "affix_path", default=None, help="Affix table file (default: packaged seed).")
@click.option("--rules", "rules_path", default=None, help="Rule file (default: packaged starter rules).")
@click.option("--ud-mode", default="paper", type=click.Choice(["paper", "strict"]), show_default=True,
              help="Default UD label mode for exports.")
@click.pass_context
def cli(ctx, corpus_dir, lexicon_path, affix_path, rules_path, ud_mode):
    """Central Kurdish POS annotation toolkit."""
    ctx.obj = {
        "config": ServiceConfig(
            corpus_dir=corpus_dir,
            lexicon_path=lexicon_path,
            affix_path=affix_path,
            rules_path=rules_path,
            ud_mode=ud_mode,
        )
    }


# -- tagset ------------------------------------------------------------------


@cli.group()
def tagset():
    """Inspect the tag inventory."""


@tagset.command("list")
@click.pass_context
def tagset_list(ctx):
    """One line per tag: abbrev, English name, category, Kurdish name."""
    toolkit = _toolkit(ctx, include_store=False)
    for desc in toolkit.registry:
        click.echo(f"{desc.abbrev}\t{desc.english_name}\t{desc.category.value}\t{desc.kurdish_name}")


@tagset.command("show")
@click.argument("abbrev")
@click.pass_context
def tagset_show(ctx, abbrev):
    """Details of one tag (aliases accepted)."""
    toolkit = _toolkit(ctx, include_store=False)
    desc = toolkit.registry.lookup(abbrev)
    click.echo(f"abbrev: {desc.abbrev}")
    click.echo(f"english: {desc.english_name}")
    click.echo(f"kurdish: {desc.kurdish_name}")
    click.echo(f"category: {desc.category.value} ({desc.category.kurdish_name})")
    click.echo(f"ud (paper): {toolkit.registry.ud_upos_for(desc.abbrev, 'paper')}")
    click.echo(f"ud (strict): {toolkit.registry.ud_upos_for(desc.abbrev, 'strict')}")
    click.echo(f"table index: {desc.table_index}")
    if desc.kurdish_needs_review:
        click.echo("note: kurdish name needs native-speaker review")


@tagset.command("tree")
@click.option("--json", "as_json", is_flag=True, help="Emit the tree as JSON.")
@click.pass_context
def tagset_tree(ctx, as_json):
    """Category tree (the same structure the UI picker uses)."""
    toolkit = _toolkit(ctx, include_store=False)
    tree = toolkit.registry.tree
    if as_json:
        click.echo(json.dumps(tree.to_dict(), ensure_ascii=False, indent=2))
        return
    click.echo(tree.root.label)
    for category in tree.root.children:
        click.echo(f"  {category.label} ({category.kurdish_label})")
        for leaf in category.children:
            click.echo(f"    {leaf.tag}\t{leaf.label}")


@tagset.command("export")
@click.pass_context
def tagset_export(ctx):
    """Machine-readable reference: one TSV record per tag."""
    toolkit = _toolkit(ctx, include_store=False)
    for desc in toolkit.registry:
        click.echo(
            "\t".join(
                (
                    str(desc.table_index),
                    desc.abbrev,
                    desc.english_name,
                    desc.kurdish_name,
                    desc.category.value,
                    toolkit.registry.ud_upos_for(desc.abbrev, "paper"),
                    toolkit.registry.ud_upos_for(desc.abbrev, "strict"),
                )
            )
        )


# -- pipeline ------------------------------------------------------------------


@cli.command("tokenize")
@click.argument("source", type=click.File("r", encoding="utf-8"), default="-")
def tokenize_cmd(source):
    """Tokenize UTF-8 text from a file or stdin; one token per line."""
    nt = normalize_text(source.read())
    for warning in nt.warnings:
        click.echo(f"warning: {warning}", err=True)
    for token in tokenize(nt):
        click.echo(f"{token.index}\t{token.start}\t{token.end}\t{token.kind.value}\t{token.surface}")


@cli.command("segment")
@click.option("--token", "surface", required=True, help="Word to decompose.")
@click.option("--max", "max_results", default=10, show_default=True)
@click.pass_context
def segment_cmd(ctx, surface, max_results):
    """Ranked morphological analyses of one word."""
    toolkit = _toolkit(ctx, include_store=False)
    for seg in toolkit.segment(surface, max_results=max_results):
        morphs = " + ".join(f"{m.surface}/{m.role.value}" for m in seg.morphs)
        line = f"{seg.score:.3f}\t{morphs}"
        if seg.notes:
            line += "\t# " + "; ".join(seg.notes)
        click.echo(line)


@cli.command("suggest")
@click.option("--token", "surface", required=True, help="Token to tag.")
@click.option("--left", default=None, help="Surface of the left neighbor token.")
@click.option("--right", default=None, help="Surface of the right neighbor token.")
@click.pass_context
def suggest_cmd(ctx, surface, left, right):
    """Ranked tag suggestions for one token."""
    toolkit = _toolkit(ctx, include_store=False)
    for scored in toolkit.suggest_for_surface(surface, left, right):
        click.echo(f"{scored.tag}\t{scored.score:.2f}\t{scored.rule_id}\t{scored.explanation}")


# -- corpus ------------------------------------------------------------------


@cli.command("create")
@click.option("--title", default="", help="Document title.")
@click.argument("source", type=click.File("r", encoding="utf-8"), default="-")
@click.pass_context
def create_cmd(ctx, title, source):
    """Create a document from raw text; prints its id."""
    toolkit = _toolkit(ctx, include_store=True)
    doc = toolkit.require_store().create_document(source.read(), title)
    click.echo(doc.id)
    click.echo(f"sentences: {len(doc.sentences)}  tokens: {doc.token_count()}", err=True)


@cli.command("annotate")
@click.argument("doc_id")
@click.option("--auto", is_flag=True, help="Write the top machine suggestion for every token.")
@click.option("--set", "manual", nargs=3, type=(int, int, str), default=None,
              metavar="SENT TOK TAG", help="Record one human annotation.")
@click.option("--annotator", default="", help="Annotator name for --set.")
@click.pass_context
def annotate_cmd(ctx, doc_id, auto, manual, annotator):
    """Annotate a stored document."""
    toolkit = _toolkit(ctx, include_store=True)
    if auto:
        written = toolkit.auto_annotate_document(doc_id)
        click.echo(f"annotated {written} tokens")
        return
    if manual is not None:
        sent, tok, tag = manual
        stored = toolkit.require_store().record_annotation(
            Annotation(
                doc_id=doc_id,
                sentence_index=sent,
                token_index=tok,
                tag=tag,
                provenance="human",
                annotator=annotator,
            )
        )
        click.echo(f"{stored.tag}\t{stored.doc_id}\t{stored.sentence_index}\t{stored.token_index}")
        return
    raise click.UsageError("pass --auto or --set SENT TOK TAG")


@cli.command("import")
@click.argument("source", type=click.File("rb"), default="-")
@click.option("--title", default="", help="Document title.")
@click.option("--on-unknown-xpos", default="reject", type=click.Choice(["reject", "unk"]),
              show_default=True, help="Reject files with unknown XPOS values, or import them as UNK.")
@click.pass_context
def import_cmd(ctx, source, title, on_unknown_xpos):
    """Import a CoNLL-U file as a new document; prints its id."""
    toolkit = _toolkit(ctx, include_store=True)
    doc = toolkit.require_store().import_document(source.read(), title=title, on_unknown_xpos=on_unknown_xpos)
    click.echo(doc.id)


@cli.command("export")
@click.argument("doc_id")
@click.option("--mode", default=None, type=click.Choice(["paper", "strict"]),
              help="UD label mode (default: the configured ud-mode).")
@click.pass_context
def export_cmd(ctx, doc_id, mode):
    """Write a document as CoNLL-U to stdout."""
    toolkit = _toolkit(ctx, include_store=True)
    data = toolkit.require_store().export_document(doc_id, mode or toolkit.ud_mode)
    sys.stdout.buffer.write(data)
    sys.stdout.buffer.flush()


@cli.command("stats")
@click.pass_context
def stats_cmd(ctx):
    """Tag distribution over current annotations, with category rollups."""
    toolkit = _toolkit(ctx, include_store=True)
    dist = toolkit.require_store().corpus_stats()
    click.echo(f"total\t{dist.total}")
    for tag in sorted(dist.counts):
        click.echo(f"{tag}\t{dist.counts[tag]}")
    for category in TagCategory:
        count = dist.category_rollup(toolkit.registry).get(category.value, 0)
        if count:
            click.echo(f"category:{category.value}\t{count}")


@cli.command("validate")
@click.argument("source", type=click.File("rb"), default="-")
@click.option("--strict", is_flag=True, help="Require strict UD UPOS labels (no GRD).")
@click.pass_context
def validate_cmd(ctx, source, strict):
    """Structurally validate a CoNLL-U file; exits 1 when invalid."""
    from .conllu import validate_conllu

    problems = validate_conllu(source.read(), strict_upos=strict)
    if problems:
        for problem in problems:
            click.echo(problem)
        ctx.exit(1)
    click.echo("OK")


@cli.command("serve")
@click.option("--config", "config_path", required=True, type=click.Path(exists=True, dir_okay=False),
              help="JSON service configuration.")
def serve_cmd(config_path):
    """Run the HTTP annotation service."""
    import uvicorn

    from .service import create_app

    config = ServiceConfig.from_file(config_path)
    toolkit = Toolkit.from_config(config)
    app = create_app(toolkit, static_dir=config.static_dir)
    host, port = config.host_and_port()
    uvicorn.run(app, host=host, port=port, log_level="info")


def main(argv: list[str] | None = None) -> int:
    """Entry point with the documented exit-code contract."""
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.exceptions.Exit as exc:
        return int(exc.exit_code)
    except click.UsageError as exc:
        message = exc.format_message()
        click.echo(f"error: {message}", err=True)
        if exc.ctx is not None:
            click.echo(exc.ctx.get_usage(), err=True)
        return 1
    except click.ClickException as exc:
        exc.show(file=sys.stderr)
        return 1
    except click.Abort:
        click.echo("aborted", err=True)
        return 1
    except CkltagError as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    except Exception as exc:  # pragma: no cover - last-resort guard
        click.echo(f"internal error: {exc.__class__.__name__}: {exc}", err=True)
        return 2


if __name__ == "__main__":
    sys.exit(main())
