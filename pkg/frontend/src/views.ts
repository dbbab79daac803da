/* Document, suggestion, and progress rendering. Machine annotations show a
 * dashed underline, human ones solid, so provenance stays visible while
 * stepping through tokens. */

import { DocumentPayload, StatsPayload, Suggestion } from "./api.js";
import { AnnotationSession, Cursor } from "./session.js";

export function renderDocumentView(
  container: HTMLElement,
  doc: DocumentPayload,
  session: AnnotationSession,
  onTokenClick: (cursor: Cursor) => void,
): void {
  container.textContent = "";
  doc.sentences.forEach((sentence, s) => {
    const row = document.createElement("div");
    row.className = "sentence";
    row.dir = "rtl";
    sentence.tokens.forEach((token, t) => {
      const el = document.createElement("span");
      el.className = `token status-${session.statuses[s]?.[t] ?? token.status}`;
      if (session.cursor && session.cursor.sentence === s && session.cursor.token === t) {
        el.classList.add("cursor");
      }
      el.dataset.sentence = String(s);
      el.dataset.token = String(t);
      const surface = document.createElement("bdi");
      surface.textContent = token.surface;
      el.append(surface);
      if (token.tag) {
        const tag = document.createElement("span");
        tag.className = "token-tag";
        tag.textContent = token.tag;
        el.append(tag);
      }
      el.addEventListener("click", () => onTokenClick({ sentence: s, token: t }));
      row.append(el);
    });
    container.append(row);
  });
  if (session.complete) {
    const done = document.createElement("p");
    done.className = "document-complete";
    done.textContent = "document complete";
    container.append(done);
  }
}

export function renderSuggestions(
  container: HTMLElement,
  suggestions: Suggestion[],
  onAccept: (rank: number) => void,
): void {
  container.textContent = "";
  const heading = document.createElement("h3");
  heading.textContent = "suggestions";
  container.append(heading);
  const list = document.createElement("ol");
  list.className = "suggestions";
  suggestions.forEach((suggestion, i) => {
    const item = document.createElement("li");
    const button = document.createElement("button");
    button.type = "button";
    button.className = "suggestion";
    button.dataset.tag = suggestion.tag;
    button.title = suggestion.explanation;
    const tag = document.createElement("span");
    tag.className = "suggestion-tag";
    tag.textContent = suggestion.tag;
    const score = document.createElement("span");
    score.className = "suggestion-score";
    score.textContent = suggestion.score.toFixed(2);
    button.append(tag, score);
    button.addEventListener("click", () => onAccept(i + 1));
    item.append(button);
    list.append(item);
  });
  container.append(list);
  const help = document.createElement("p");
  help.className = "hint";
  help.textContent = "Enter accepts the top suggestion; 1–9 accept by rank";
  container.append(help);
}

export function renderProgress(
  container: HTMLElement,
  session: AnnotationSession,
  stats: StatsPayload | null,
  exportHref: string,
): void {
  container.textContent = "";
  const done = session.annotatedCount();
  const total = session.tokenCount();
  const percent = total === 0 ? 0 : Math.round((100 * done) / total);

  const counter = document.createElement("p");
  counter.className = "progress-counter";
  counter.textContent = `${done} / ${total} tokens (${percent}%)`;
  container.append(counter);

  const bar = document.createElement("div");
  bar.className = "progress-bar";
  const fill = document.createElement("div");
  fill.className = "progress-fill";
  fill.style.width = `${percent}%`;
  bar.append(fill);
  container.append(bar);

  if (stats) {
    const panel = document.createElement("dl");
    panel.className = "distribution";
    for (const [category, count] of Object.entries(stats.by_category)) {
      if (!count) continue;
      const dt = document.createElement("dt");
      dt.textContent = category;
      const dd = document.createElement("dd");
      dd.textContent = String(count);
      panel.append(dt, dd);
    }
    container.append(panel);
  }

  const exportLink = document.createElement("a");
  exportLink.className = "export-button";
  exportLink.href = exportHref;
  exportLink.download = "";
  exportLink.textContent = "download CoNLL-U";
  container.append(exportLink);
}

export function renderNotice(container: HTMLElement, kind: string, message: string): void {
  container.textContent = "";
  if (!message) return;
  const note = document.createElement("p");
  note.className = `notice notice-${kind}`;
  note.textContent = message;
  container.append(note);
}
