/* Annotation session state: the cursor, per-token statuses mirrored from
 * the server, and the pending suggestion list for the cursor token.
 *
 * The cursor always addresses an existing token; when every token is
 * tagged the session reports complete and the cursor is null. Accepting a
 * tag is optimistic: the local status flips immediately and is rolled back
 * if the server rejects the write. */

import {
  ApiClient,
  ApiError,
  DocumentPayload,
  Suggestion,
  TokenStatus,
} from "./api.js";

export interface Cursor {
  sentence: number;
  token: number;
}

export type AcceptOutcome =
  | { kind: "accepted"; tag: string }
  | { kind: "complete"; tag: string }
  | { kind: "hint"; message: string }
  | { kind: "rejected"; message: string }
  | { kind: "network"; message: string };

export class AnnotationSession {
  readonly docId: string;
  statuses: TokenStatus[][];
  cursor: Cursor | null;
  suggestions: Suggestion[] = [];
  annotator: string;

  constructor(doc: DocumentPayload, annotator = "annotator") {
    this.docId = doc.id;
    this.statuses = doc.sentences.map((s) => s.tokens.map((t) => t.status));
    this.annotator = annotator;
    this.cursor = this.nextUntagged(null);
  }

  /* server truth wins over optimistic local state */
  applyServer(doc: DocumentPayload): void {
    this.statuses = doc.sentences.map((s) => s.tokens.map((t) => t.status));
    if (this.cursor && !this.tokenExists(this.cursor)) {
      this.cursor = this.nextUntagged(null);
    }
    if (this.cursor === null) {
      this.cursor = this.nextUntagged(null);
    }
  }

  tokenExists(cursor: Cursor): boolean {
    return (
      cursor.sentence >= 0 &&
      cursor.sentence < this.statuses.length &&
      cursor.token >= 0 &&
      cursor.token < this.statuses[cursor.sentence].length
    );
  }

  tokenCount(): number {
    return this.statuses.reduce((n, s) => n + s.length, 0);
  }

  annotatedCount(): number {
    return this.statuses.reduce(
      (n, s) => n + s.filter((st) => st !== "untagged").length,
      0,
    );
  }

  get complete(): boolean {
    return this.tokenCount() > 0 && this.annotatedCount() === this.tokenCount();
  }

  /* linear scan from just after `from` (or the start), wrapping once */
  nextUntagged(from: Cursor | null): Cursor | null {
    const flat: Cursor[] = [];
    this.statuses.forEach((sentence, s) =>
      sentence.forEach((_, t) => flat.push({ sentence: s, token: t })),
    );
    if (flat.length === 0) return null;
    let startAt = 0;
    if (from) {
      const idx = flat.findIndex(
        (c) => c.sentence === from.sentence && c.token === from.token,
      );
      if (idx >= 0) startAt = idx + 1;
    }
    for (let step = 0; step < flat.length; step++) {
      const c = flat[(startAt + step) % flat.length];
      if (this.statuses[c.sentence][c.token] === "untagged") return c;
    }
    return null;
  }

  moveTo(cursor: Cursor): void {
    if (this.tokenExists(cursor)) this.cursor = cursor;
  }

  /* Accept a suggestion by 1-based rank (Enter = rank 1). */
  async acceptSuggestion(api: ApiClient, rank: number): Promise<AcceptOutcome> {
    if (rank < 1 || rank > this.suggestions.length) {
      return {
        kind: "hint",
        message: `no suggestion at rank ${rank} (list has ${this.suggestions.length})`,
      };
    }
    return this.annotateCurrent(api, this.suggestions[rank - 1].tag);
  }

  /* Record a human annotation for the cursor token and advance. */
  async annotateCurrent(api: ApiClient, tag: string): Promise<AcceptOutcome> {
    const cursor = this.cursor;
    if (!cursor) return { kind: "hint", message: "document complete" };
    const previous = this.statuses[cursor.sentence][cursor.token];
    this.statuses[cursor.sentence][cursor.token] = "human"; // optimistic
    try {
      await api.postAnnotation(
        this.docId,
        cursor.sentence,
        cursor.token,
        tag,
        this.annotator,
      );
    } catch (err) {
      this.statuses[cursor.sentence][cursor.token] = previous; // roll back
      if (err instanceof ApiError) {
        return { kind: "rejected", message: err.message };
      }
      return { kind: "network", message: "annotation not saved; check the connection and retry" };
    }
    // the old list belongs to the previous token; never leave it live
    this.suggestions = [];
    const next = this.nextUntagged(cursor);
    if (next) {
      this.cursor = next;
      return { kind: "accepted", tag };
    }
    this.cursor = null;
    return { kind: "complete", tag };
  }

  /* Pull fresh suggestions for the cursor token. */
  async refreshSuggestions(api: ApiClient): Promise<void> {
    if (!this.cursor) {
      this.suggestions = [];
      return;
    }
    const res = await api.suggest(this.docId, this.cursor.sentence, this.cursor.token);
    this.suggestions = res.suggestions;
  }
}
