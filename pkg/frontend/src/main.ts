/**
 * Application wiring: question picker, board lifecycle, submit flow.
 *
 * The seed from the server is written into the URL, so reloading (or
 * sharing the link) reproduces the identical shuffled board; at most one
 * grade request is in flight at a time.
 */

import { ApiClient, ApiError } from './api.js';
import { Board, Zone } from './board.js';
import { AppState, renderApp } from './view.js';

export class App {
    private readonly state: AppState = {
        board: null,
        busy: false,
        error: null,
        focusId: null,
    };

    constructor(
        private readonly api: ApiClient,
        private readonly root: HTMLElement,
        private readonly picker: HTMLSelectElement,
    ) {}

    async start(): Promise<void> {
        try {
            const listing = await this.api.listQuestions();
            for (const entry of listing) {
                const option = document.createElement('option');
                option.value = entry.id;
                option.textContent = entry.title ? `${entry.id} - ${entry.title}` : entry.id;
                this.picker.appendChild(option);
            }
            this.picker.addEventListener('change', () => {
                void this.loadQuestion(this.picker.value);
            });

            const params = new URLSearchParams(window.location.search);
            const requested = params.get('q') ?? listing[0]?.id;
            if (requested) {
                this.picker.value = requested;
                await this.loadQuestion(requested, params.get('seed') ?? undefined);
            } else {
                this.state.error = 'No questions are available on this server.';
                this.render();
            }
        } catch (error) {
            this.fail(error);
        }
    }

    async loadQuestion(id: string, seed?: string): Promise<void> {
        this.state.error = null;
        this.state.board = null;
        this.state.focusId = null;
        this.render();
        try {
            const view = await this.api.getQuestion(id, seed);
            this.state.board = new Board(view);
            const params = new URLSearchParams(window.location.search);
            params.set('q', view.question_id);
            params.set('seed', view.seed);
            window.history.replaceState(null, '', `?${params.toString()}`);
        } catch (error) {
            this.fail(error);
            return;
        }
        this.render();
    }

    private readonly callbacks = {
        onMove: (id: string, zone: Zone, index: number): void => {
            this.state.board?.move(id, zone, index);
            this.state.focusId = null;
            this.render();
        },
        onNudge: (id: string, delta: -1 | 1): void => {
            this.state.board?.nudge(id, delta);
            this.state.focusId = id;
            this.render();
        },
        onTransfer: (id: string): void => {
            this.state.board?.transfer(id);
            this.state.focusId = id;
            this.render();
        },
        onSubmit: (): void => {
            void this.submit();
        },
    };

    async submit(): Promise<void> {
        const board = this.state.board;
        if (board === null || this.state.busy) return;
        this.state.busy = true;
        this.state.error = null;
        this.render();
        try {
            const outcome = await this.api.grade(
                board.questionId,
                board.seed,
                board.orderingForSubmit(),
            );
            board.setOutcome(outcome);
        } catch (error) {
            this.fail(error);
        }
        this.state.busy = false;
        this.render();
    }

    private fail(error: unknown): void {
        this.state.busy = false;
        if (error instanceof ApiError) {
            this.state.error = `Server error (${error.status}): ${error.message}`;
        } else {
            this.state.error = `Something went wrong: ${String(error)}`;
        }
        this.render();
    }

    private render(): void {
        renderApp(this.root, this.state, this.callbacks);
    }
}

function boot(): void {
    const root = document.getElementById('app');
    const picker = document.getElementById('question-picker');
    if (!(root instanceof HTMLElement) || !(picker instanceof HTMLSelectElement)) {
        return;
    }
    void new App(new ApiClient(), root, picker).start();
}

if (typeof document !== 'undefined' && document.getElementById('app')) {
    boot();
}
