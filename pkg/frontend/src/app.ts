/* Application shell: wires the API client, session state, picker, and
 * views together; owns keyboard shortcuts and the status poll. */

import { ApiClient, DocumentPayload, StatsPayload, TreeNode } from "./api.js";
import { renderPickerError, renderTagPicker, PickerHandle } from "./picker.js";
import { AcceptOutcome, AnnotationSession, Cursor } from "./session.js";
import {
  renderDocumentView,
  renderNotice,
  renderProgress,
  renderSuggestions,
} from "./views.js";

const POLL_MS = 5000;

export class App {
  api: ApiClient;
  root: HTMLElement;
  session: AnnotationSession | null = null;
  doc: DocumentPayload | null = null;
  picker: PickerHandle | null = null;
  private regions: Record<string, HTMLElement> = {};
  private pollTimer: ReturnType<typeof setInterval> | null = null;

  constructor(root: HTMLElement, apiBase = "") {
    this.api = new ApiClient(apiBase);
    this.root = root;
  }

  async start(): Promise<void> {
    this.buildLayout();
    await this.loadPicker();
    await this.refreshDocumentList();
    document.addEventListener("keydown", this.onKey);
    this.pollTimer = setInterval(() => void this.poll(), POLL_MS);
  }

  stop(): void {
    document.removeEventListener("keydown", this.onKey);
    if (this.pollTimer) clearInterval(this.pollTimer);
  }

  private buildLayout(): void {
    this.root.textContent = "";
    this.root.className = "app";
    const make = (id: string, tag = "div"): HTMLElement => {
      const el = document.createElement(tag);
      el.id = id;
      this.root.append(el);
      return el;
    };
    this.regions.toolbar = make("toolbar", "header");
    this.regions.notice = make("notice");
    this.regions.document = make("document", "main");
    this.regions.suggestions = make("suggestions", "aside");
    this.regions.picker = make("picker", "aside");
    this.regions.progress = make("progress", "footer");

    const select = document.createElement("select");
    select.id = "doc-select";
    select.addEventListener("change", () => {
      if (select.value) void this.openDocument(select.value);
    });

    const title = document.createElement("input");
    title.id = "new-title";
    title.placeholder = "title";
    const text = document.createElement("textarea");
    text.id = "new-text";
    text.placeholder = "paste Kurdish text…";
    text.dir = "rtl";
    const create = document.createElement("button");
    create.id = "new-create";
    create.type = "button";
    create.textContent = "create document";
    create.addEventListener("click", () => {
      void this.createDocument(title.value, text.value).then(() => {
        title.value = "";
        text.value = "";
      });
    });
    this.regions.toolbar.append(select, title, text, create);
  }

  private async loadPicker(): Promise<void> {
    let tree: TreeNode;
    try {
      tree = await this.api.getTagTree();
    } catch (err) {
      this.picker = renderPickerError(
        this.regions.picker,
        err instanceof Error ? err.message : "fetch failed",
      );
      const retry = this.regions.picker.querySelector(".retry-button");
      retry?.addEventListener("click", () => void this.loadPicker());
      return;
    }
    this.picker = renderTagPicker(this.regions.picker, tree, (tag) => {
      void this.annotate(tag);
    });
  }

  async refreshDocumentList(): Promise<void> {
    const select = this.root.querySelector<HTMLSelectElement>("#doc-select");
    if (!select) return;
    const { documents } = await this.api.listDocuments();
    const current = select.value;
    select.textContent = "";
    const placeholder = document.createElement("option");
    placeholder.value = "";
    placeholder.textContent = documents.length ? "choose a document…" : "no documents yet";
    select.append(placeholder);
    for (const doc of documents) {
      const option = document.createElement("option");
      option.value = doc.id;
      option.textContent = `${doc.title || doc.id} (${doc.tokens} tokens)`;
      select.append(option);
    }
    if (current) select.value = current;
  }

  async createDocument(title: string, text: string): Promise<void> {
    if (!text.trim()) {
      this.notify("hint", "enter some text first");
      return;
    }
    const summary = await this.api.createDocument(title, text);
    await this.refreshDocumentList();
    const select = this.root.querySelector<HTMLSelectElement>("#doc-select");
    if (select) select.value = summary.id;
    await this.openDocument(summary.id);
  }

  async openDocument(id: string): Promise<void> {
    this.doc = await this.api.getDocument(id);
    this.session = new AnnotationSession(this.doc);
    await this.session.refreshSuggestions(this.api);
    this.notify("", "");
    await this.renderAll();
  }

  /* periodic sync: statuses reflect server truth */
  async poll(): Promise<void> {
    if (!this.session || !this.doc) return;
    try {
      const doc = await this.api.getDocument(this.session.docId);
      this.doc = doc;
      this.session.applyServer(doc);
      await this.renderAll();
    } catch {
      /* transient poll failures keep the last known state */
    }
  }

  private onKey = (event: KeyboardEvent): void => {
    if (!this.session) return;
    const target = event.target as HTMLElement | null;
    if (target && (target.tagName === "INPUT" || target.tagName === "TEXTAREA")) return;
    if (event.key === "Enter") {
      event.preventDefault();
      void this.accept(1);
    } else if (/^[1-9]$/.test(event.key)) {
      event.preventDefault();
      void this.accept(Number(event.key));
    }
  };

  async accept(rank: number): Promise<void> {
    if (!this.session) return;
    const outcome = await this.session.acceptSuggestion(this.api, rank);
    await this.afterAccept(outcome);
  }

  async annotate(tag: string): Promise<void> {
    if (!this.session) return;
    const outcome = await this.session.annotateCurrent(this.api, tag);
    await this.afterAccept(outcome);
  }

  private async afterAccept(outcome: AcceptOutcome): Promise<void> {
    switch (outcome.kind) {
      case "accepted":
        this.notify("", "");
        await this.session?.refreshSuggestions(this.api);
        break;
      case "complete":
        this.notify("done", "document complete");
        break;
      case "hint":
        this.notify("hint", outcome.message);
        break;
      case "rejected":
        this.notify("error", outcome.message);
        break;
      case "network":
        this.notify("retry", outcome.message);
        break;
    }
    await this.renderAll();
  }

  async selectToken(cursor: Cursor): Promise<void> {
    if (!this.session) return;
    this.session.moveTo(cursor);
    await this.session.refreshSuggestions(this.api);
    await this.renderAll();
  }

  notify(kind: string, message: string): void {
    renderNotice(this.regions.notice, kind || "info", message);
  }

  async renderAll(): Promise<void> {
    if (!this.session || !this.doc) return;
    renderDocumentView(this.regions.document, this.doc, this.session, (cursor) => {
      void this.selectToken(cursor);
    });
    renderSuggestions(this.regions.suggestions, this.session.suggestions, (rank) => {
      void this.accept(rank);
    });
    let stats: StatsPayload | null = null;
    try {
      stats = await this.api.getStats();
    } catch {
      stats = null; // degrade to the token counter
    }
    renderProgress(
      this.regions.progress,
      this.session,
      stats,
      this.api.exportUrl(this.session.docId),
    );
  }
}

export function mount(root: HTMLElement, apiBase = ""): App {
  const app = new App(root, apiBase);
  void app.start();
  return app;
}
