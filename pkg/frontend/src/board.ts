/**
 * Board state: which blocks sit in the starting zone, which sit in the
 * target zone (the proof under construction), and the last grade result.
 * Pure data plus move semantics; rendering and network live elsewhere.
 */

import type { GradeDoc, QuestionView } from './api.js';

export type Zone = 'starting' | 'target';

export class Board {
    readonly questionId: string;
    readonly seed: string;
    readonly prompt: string;
    starting: string[];
    target: string[];
    lastOutcome: GradeDoc | null = null;

    private readonly texts: Map<string, string>;

    constructor(view: QuestionView) {
        this.questionId = view.question_id;
        this.seed = view.seed;
        this.prompt = view.prompt;
        this.texts = new Map(view.blocks.map((b) => [b.id, b.text]));
        this.starting = view.blocks.map((b) => b.id);
        this.target = [];
    }

    textOf(id: string): string {
        return this.texts.get(id) ?? '';
    }

    blockIds(): string[] {
        return [...this.texts.keys()];
    }

    zoneOf(id: string): Zone | null {
        if (this.starting.includes(id)) return 'starting';
        if (this.target.includes(id)) return 'target';
        return null;
    }

    /**
     * Remove the block from its zone and insert it at `toIndex` of
     * `toZone` (clamped to the end; relative order of everything else is
     * preserved). Unknown ids are a no-op. Any move invalidates the last
     * outcome: the feedback referred to a board that no longer exists.
     */
    move(id: string, toZone: Zone, toIndex: number): boolean {
        const fromZone = this.zoneOf(id);
        if (fromZone === null) return false;
        const from = fromZone === 'starting' ? this.starting : this.target;
        from.splice(from.indexOf(id), 1);
        const to = toZone === 'starting' ? this.starting : this.target;
        const index = Math.max(0, Math.min(Math.trunc(toIndex), to.length));
        to.splice(index, 0, id);
        this.lastOutcome = null;
        return true;
    }

    /** Move one step up or down within the block's current zone. */
    nudge(id: string, delta: -1 | 1): boolean {
        const zone = this.zoneOf(id);
        if (zone === null) return false;
        const list = zone === 'starting' ? this.starting : this.target;
        const index = list.indexOf(id);
        const next = index + delta;
        if (next < 0 || next >= list.length) return false;
        return this.move(id, zone, next);
    }

    /** Send the block to the end of the other zone (keyboard transfer). */
    transfer(id: string): boolean {
        const zone = this.zoneOf(id);
        if (zone === null) return false;
        const other: Zone = zone === 'starting' ? 'target' : 'starting';
        return this.move(id, other, Number.MAX_SAFE_INTEGER);
    }

    orderingForSubmit(): string[] {
        return [...this.target];
    }

    setOutcome(outcome: GradeDoc): void {
        this.lastOutcome = outcome;
    }

    /** 0-based target row to highlight after a wrong-at-line grade. */
    failedIndex(): number | null {
        const outcome = this.lastOutcome;
        if (outcome && outcome.status === 'wrong_at_line' && outcome.first_failure !== undefined) {
            return outcome.first_failure - 1;
        }
        return null;
    }
}
