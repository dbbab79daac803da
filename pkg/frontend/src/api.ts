/* Typed client for the annotation service. All endpoints live under /api
 * and errors arrive as a uniform {error, code, detail} envelope. */

export interface TagInfo {
  table_index: number;
  abbrev: string;
  english_name: string;
  kurdish_name: string;
  category: string;
  category_kurdish: string;
  ud_paper: string;
  ud_strict: string;
  kurdish_needs_review: boolean;
}

export interface TagsetPayload {
  tags: TagInfo[];
  aliases: Record<string, string>;
}

export interface TreeNode {
  label: string;
  kurdish_label: string;
  tag?: string;
  children?: TreeNode[];
}

export type TokenStatus = "untagged" | "machine" | "human";

export interface TokenPayload {
  index: number;
  surface: string;
  start: number;
  end: number;
  kind: string;
  status: TokenStatus;
  tag: string | null;
  annotator: string | null;
}

export interface SentencePayload {
  index: number;
  start: number;
  end: number;
  text: string;
  tokens: TokenPayload[];
}

export interface DocumentPayload {
  id: string;
  title: string;
  text: string;
  created_at: string;
  tokens: number;
  sentences: SentencePayload[];
}

export interface DocumentSummary {
  id: string;
  title: string;
  sentences: number;
  tokens: number;
  created_at: string;
}

export interface Suggestion {
  tag: string;
  score: number;
  rule_id: string;
  explanation: string;
}

export interface StatsPayload {
  total: number;
  counts: Record<string, number>;
  by_category: Record<string, number>;
}

export interface StoredAnnotation {
  doc_id: string;
  sentence_index: number;
  token_index: number;
  tag: string;
  provenance: string;
  annotator: string;
  timestamp: string;
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
  ) {
    super(message);
  }
}

async function parseError(res: Response): Promise<never> {
  let code = "http_error";
  let message = `${res.status} ${res.statusText}`;
  try {
    const body = await res.json();
    if (body && typeof body === "object") {
      code = body.code ?? code;
      message = body.error ?? message;
    }
  } catch {
    /* non-JSON error body; keep the status line */
  }
  throw new ApiError(res.status, code, message);
}

export class ApiClient {
  constructor(public base: string = "") {}

  private async get<T>(path: string): Promise<T> {
    const res = await fetch(this.base + path);
    if (!res.ok) await parseError(res);
    return res.json() as Promise<T>;
  }

  private async post<T>(path: string, body: unknown): Promise<T> {
    const res = await fetch(this.base + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!res.ok) await parseError(res);
    return res.json() as Promise<T>;
  }

  getTagset(): Promise<TagsetPayload> {
    return this.get("/api/tagset");
  }

  getTagTree(): Promise<TreeNode> {
    return this.get("/api/tagset/tree");
  }

  listDocuments(): Promise<{ documents: DocumentSummary[] }> {
    return this.get("/api/documents");
  }

  createDocument(title: string, text: string): Promise<DocumentSummary> {
    return this.post("/api/documents", { title, text });
  }

  getDocument(id: string): Promise<DocumentPayload> {
    return this.get(`/api/documents/${encodeURIComponent(id)}`);
  }

  suggest(doc: string, sent: number, tok: number): Promise<{ suggestions: Suggestion[] }> {
    return this.get(
      `/api/suggest?doc=${encodeURIComponent(doc)}&sent=${sent}&tok=${tok}`,
    );
  }

  postAnnotation(
    doc: string,
    sent: number,
    tok: number,
    tag: string,
    annotator: string,
  ): Promise<StoredAnnotation> {
    return this.post("/api/annotations", { doc, sent, tok, tag, annotator });
  }

  autoAnnotate(doc: string): Promise<{ annotated: number }> {
    return this.post(`/api/documents/${encodeURIComponent(doc)}/auto-annotate`, {});
  }

  getStats(): Promise<StatsPayload> {
    return this.get("/api/stats");
  }

  exportUrl(doc: string, mode: "paper" | "strict" = "strict"): string {
    return `${this.base}/api/documents/${encodeURIComponent(doc)}/export?mode=${mode}`;
  }

  async exportConllu(doc: string, mode: "paper" | "strict" = "strict"): Promise<string> {
    const res = await fetch(this.exportUrl(doc, mode));
    if (!res.ok) await parseError(res);
    return res.text();
  }
}
